"""
Exponent vectors and the simplices Delta(n).

A MultiIndex is the exponent of a (Laurent) monomial x0^e0 * ... * xn^en.
Delta(n) indexes the monomial bases of H^0(O(n)) for n >= 0 and of
H^2(O(n)) for n <= -3 on the projective plane.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, List, Sequence, Tuple

Permutation = Tuple[int, ...]


@dataclass(frozen=True, order=True)
class MultiIndex:
    """Integer exponent vector; arithmetic and equality are entrywise."""

    entries: Tuple[int, ...]

    def __post_init__(self) -> None:
        entries = tuple(int(value) for value in self.entries)
        if not entries:
            raise ValueError("MultiIndex needs at least one entry")
        object.__setattr__(self, "entries", entries)

    @classmethod
    def of(cls, *values: int) -> "MultiIndex":
        return cls(tuple(values))

    @classmethod
    def zero(cls, length: int) -> "MultiIndex":
        return cls((0,) * length)

    @classmethod
    def unit(cls, position: int, length: int) -> "MultiIndex":
        entries = [0] * length
        entries[position] = 1
        return cls(tuple(entries))

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[int]:
        return iter(self.entries)

    def __getitem__(self, position: int) -> int:
        return self.entries[position]

    def _check_length(self, other: "MultiIndex") -> None:
        if len(other) != len(self):
            raise ValueError(
                f"MultiIndex length mismatch: {self} has {len(self)} entries, {other} has {len(other)}"
            )

    def __add__(self, other: "MultiIndex") -> "MultiIndex":
        self._check_length(other)
        return MultiIndex(tuple(a + b for a, b in zip(self.entries, other.entries)))

    def __sub__(self, other: "MultiIndex") -> "MultiIndex":
        self._check_length(other)
        return MultiIndex(tuple(a - b for a, b in zip(self.entries, other.entries)))

    def __neg__(self) -> "MultiIndex":
        return MultiIndex(tuple(-a for a in self.entries))

    @property
    def total(self) -> int:
        return sum(self.entries)

    def is_nonnegative(self) -> bool:
        return all(value >= 0 for value in self.entries)

    def is_negative(self) -> bool:
        """True when every entry is strictly negative."""
        return all(value < 0 for value in self.entries)

    def negative_positions(self) -> frozenset:
        return frozenset(i for i, value in enumerate(self.entries) if value < 0)

    def permuted(self, sigma: Permutation) -> "MultiIndex":
        """Move entry i to position sigma[i]."""
        if sorted(sigma) != list(range(len(self))):
            raise ValueError(f"{sigma!r} is not a permutation of {len(self)} positions")
        entries = [0] * len(self)
        for position, value in enumerate(self.entries):
            entries[sigma[position]] = value
        return MultiIndex(tuple(entries))

    @property
    def label(self) -> str:
        """Compact digit label, e.g. '110' for (1,1,0)."""
        if all(0 <= value <= 9 for value in self.entries):
            return "".join(str(value) for value in self.entries)
        return "_".join(str(value) for value in self.entries)

    def __str__(self) -> str:
        return "(" + ",".join(str(value) for value in self.entries) + ")"


@lru_cache(maxsize=None)
def _delta_tuple(n: int, length: int) -> Tuple[MultiIndex, ...]:
    if n >= 0:
        parts = n
        shift = 0
    else:
        # strictly negative vectors summing to n are -(positive compositions of -n)
        parts = -n - length
        shift = 1
        if parts < 0:
            return ()
    vectors = []
    # stars and bars: choose length-1 bar positions among parts + length - 1 slots
    for bars in itertools.combinations(range(parts + length - 1), length - 1):
        previous = -1
        counts = []
        for bar in bars:
            counts.append(bar - previous - 1)
            previous = bar
        counts.append(parts + length - 1 - previous - 1)
        if n >= 0:
            vectors.append(MultiIndex(tuple(counts)))
        else:
            vectors.append(MultiIndex(tuple(-(count + shift) for count in counts)))
    return tuple(sorted(vectors, reverse=True))


def delta_set(n: int, length: int = 3) -> List[MultiIndex]:
    """
    Return Delta(n) in descending lexicographic order.

    For n >= 0 these are the nonnegative vectors summing to n, for n < 0 the
    strictly negative ones. Delta(-1) and Delta(-2) are empty for length 3.

    Args:
        n: Total degree
        length: Number of entries (3 for the projective plane)

    Returns:
        List of MultiIndex
    """
    if length < 1:
        raise ValueError(f"length must be positive, got {length}")
    return list(_delta_tuple(n, length))


def star(alpha: MultiIndex) -> MultiIndex:
    """(-1,...,-1) - alpha; an involution exchanging Delta(-5) and Delta(2)."""
    return MultiIndex(tuple(-1 - value for value in alpha.entries))


def permutation_sign(sigma: Sequence[int]) -> int:
    """Sign of a permutation given in one-line notation."""
    inversions = sum(
        1
        for i in range(len(sigma))
        for j in range(i + 1, len(sigma))
        if sigma[i] > sigma[j]
    )
    return -1 if inversions % 2 else 1


def all_permutations(size: int = 3) -> List[Permutation]:
    return list(itertools.permutations(range(size)))


__all__ = [
    "MultiIndex",
    "Permutation",
    "all_permutations",
    "delta_set",
    "permutation_sign",
    "star",
]
