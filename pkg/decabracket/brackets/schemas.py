"""
Structured dataclasses for bracket tables.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from decabracket.polynomials.multidegree import MultiIndex
from decabracket.polynomials.polynomial import (
    Polynomial,
    coordinate_labels,
    coordinate_ring,
    format_monomial,
    format_rational,
    poly_add,
    poly_scale,
    render,
)

Pair = Tuple[MultiIndex, MultiIndex]


def coordinate_position(label: MultiIndex) -> int:
    try:
        return coordinate_labels().index(label)
    except ValueError as e:
        raise ValueError(f"{label} is not a coordinate label in Delta(2)") from e


def canonical_pairs() -> List[Pair]:
    """The 15 pairs (a, b) with a before b in coordinate order."""
    labels = coordinate_labels()
    return [(labels[i], labels[j]) for i in range(len(labels)) for j in range(i + 1, len(labels))]


def split_quadratic(exponent: Tuple[int, ...]) -> Tuple[MultiIndex, MultiIndex]:
    """y_{a'} y_{b'} -> (a', b') with a' not after b' in coordinate order."""
    labels = coordinate_labels()
    positions = [i for i, e in enumerate(exponent) for _ in range(e)]
    if len(positions) != 2:
        raise ValueError(f"monomial with exponent {exponent} is not quadratic")
    return labels[positions[0]], labels[positions[1]]


@dataclass(frozen=True)
class BracketTable:
    """
    The skew table {x^a, x^b}_F for a cubic F, one quadratic form per pair.

    Only pairs with a before b in coordinate order are stored; entry() supplies
    the rest by skew-symmetry.
    """

    cubic: Polynomial
    entries: Dict[Pair, Polynomial] = field(default_factory=dict)

    def __post_init__(self) -> None:
        ring = coordinate_ring()
        entries = {pair: ring.zero for pair in canonical_pairs()}
        for (a, b), value in self.entries.items():
            if (a, b) not in entries:
                raise ValueError(f"pair ({a}, {b}) is not stored in coordinate order")
            if value.ring != ring:
                raise ValueError(f"entry for ({a}, {b}) is not a polynomial in the six coordinates")
            entries[(a, b)] = value
        object.__setattr__(self, "entries", entries)

    @property
    def label(self) -> Optional[MultiIndex]:
        """c when the cubic is the monic monomial x^c, else None."""
        if len(self.cubic) != 1:
            return None
        (exponent, coeff), = self.cubic.items()
        return MultiIndex(exponent) if coeff == 1 else None

    @property
    def name(self) -> str:
        label = self.label
        return format_monomial(label) if label is not None else render(self.cubic)

    def entry(self, a: MultiIndex, b: MultiIndex) -> Polynomial:
        if a == b:
            coordinate_position(a)
            return coordinate_ring().zero
        if (a, b) in self.entries:
            return self.entries[(a, b)]
        if (b, a) in self.entries:
            return -self.entries[(b, a)]
        raise ValueError(f"({a}, {b}) is not a pair of coordinate labels")

    def is_zero(self) -> bool:
        return all(value == 0 for value in self.entries.values())

    def __add__(self, other: "BracketTable") -> "BracketTable":
        return BracketTable(
            poly_add(self.cubic, other.cubic),
            {pair: poly_add(value, other.entries[pair]) for pair, value in self.entries.items()},
        )

    def __sub__(self, other: "BracketTable") -> "BracketTable":
        return self + other.scale(-1)

    def scale(self, factor) -> "BracketTable":
        return BracketTable(
            poly_scale(self.cubic, factor),
            {pair: poly_scale(value, factor) for pair, value in self.entries.items()},
        )

    def to_dict(self) -> dict:
        label = self.label
        return {
            "c": list(label) if label is not None else None,
            "cubic": render(self.cubic),
            "entries": [
                {
                    "a": list(a),
                    "b": list(b),
                    "terms": [
                        {
                            "aprime": list(aprime),
                            "bprime": list(bprime),
                            "coeff": format_rational(coeff),
                        }
                        for monom, coeff in value.terms()
                        for aprime, bprime in [split_quadratic(monom)]
                    ],
                }
                for (a, b), value in self.entries.items()
            ],
        }


__all__ = ["BracketTable", "Pair", "canonical_pairs", "coordinate_position", "split_quadratic"]
