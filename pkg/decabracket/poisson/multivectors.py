"""
Skew bivectors and trivectors with polynomial components.

Components are stored once per strictly increasing index tuple and only when
nonzero; accessors restore the antisymmetry signs.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, Iterator, Optional, Tuple

from sympy.polys.rings import PolyRing

from decabracket.polynomials.multidegree import permutation_sign
from decabracket.polynomials.polynomial import Polynomial, RingMismatchError, poly_add, poly_scale, render


def _normalize(ring: PolyRing, components: Dict[Tuple[int, ...], Polynomial], arity: int) -> Dict[Tuple[int, ...], Polynomial]:
    normalized: Dict[Tuple[int, ...], Polynomial] = {}
    for key, value in components.items():
        key = tuple(key)
        if len(key) != arity:
            raise ValueError(f"component index {key} does not have {arity} entries")
        if any(not 0 <= i < ring.ngens for i in key):
            raise ValueError(f"component index {key} is out of range for {ring.ngens} variables")
        if value.ring != ring:
            raise RingMismatchError(f"component {key} lives in a different ring")
        if len(set(key)) < arity:
            if value != 0:
                raise ValueError(f"diagonal component {key} must vanish, got {render(value)}")
            continue
        order = tuple(sorted(range(arity), key=lambda position: key[position]))
        sorted_key = tuple(key[position] for position in order)
        signed = value if permutation_sign(order) == 1 else -value
        total = normalized[sorted_key] + signed if sorted_key in normalized else signed
        if total == 0:
            normalized.pop(sorted_key, None)
        else:
            normalized[sorted_key] = total
    return normalized


def _signed_lookup(components: Dict[Tuple[int, ...], Polynomial], ring: PolyRing, key: Tuple[int, ...]) -> Polynomial:
    if len(set(key)) < len(key):
        return ring.zero
    order = tuple(sorted(range(len(key)), key=lambda position: key[position]))
    value = components.get(tuple(key[position] for position in order))
    if value is None:
        return ring.zero
    return value if permutation_sign(order) == 1 else -value


@dataclass(frozen=True)
class PolyBivector:
    """Skew array Pi^{ij} of polynomials in the variables of ``ring``."""

    ring: PolyRing
    components: Dict[Tuple[int, int], Polynomial] = field(default_factory=dict)

    def __post_init__(self) -> None:
        object.__setattr__(self, "components", _normalize(self.ring, self.components, 2))

    @property
    def size(self) -> int:
        return self.ring.ngens

    def component(self, i: int, j: int) -> Polynomial:
        return _signed_lookup(self.components, self.ring, (i, j))

    def is_zero(self) -> bool:
        return not self.components

    def __iter__(self) -> Iterator[Tuple[Tuple[int, int], Polynomial]]:
        return iter(sorted(self.components.items()))

    def _check_ring(self, other: "PolyBivector") -> None:
        if other.ring != self.ring:
            raise RingMismatchError(
                f"bivectors live in different rings: {self.ring.ngens} vs {other.ring.ngens} variables"
            )

    def __add__(self, other: "PolyBivector") -> "PolyBivector":
        self._check_ring(other)
        merged = dict(self.components)
        for key, value in other.components.items():
            merged[key] = poly_add(merged[key], value) if key in merged else value
        return PolyBivector(self.ring, merged)

    def __neg__(self) -> "PolyBivector":
        return self.scale(-1)

    def __sub__(self, other: "PolyBivector") -> "PolyBivector":
        return self + (-other)

    def scale(self, factor) -> "PolyBivector":
        return PolyBivector(self.ring, {key: poly_scale(value, factor) for key, value in self.components.items()})

    def degrees(self) -> set:
        return {sum(monom) for value in self.components.values() for monom in value.keys()}


@dataclass(frozen=True)
class ChartBivector(PolyBivector):
    """
    Bivector on the affine chart {y_chart != 0} of P^5.

    Local index p refers to the ratio u_i = y_i / y_chart with i = indices[p].
    """

    chart: int = 0
    indices: Tuple[int, ...] = ()


@dataclass(frozen=True)
class PolyTrivector:
    """Alternating array J^{ijk}; e.g. the Jacobiator of a bivector."""

    ring: PolyRing
    components: Dict[Tuple[int, int, int], Polynomial] = field(default_factory=dict)

    def __post_init__(self) -> None:
        object.__setattr__(self, "components", _normalize(self.ring, self.components, 3))

    @property
    def size(self) -> int:
        return self.ring.ngens

    def component(self, i: int, j: int, k: int) -> Polynomial:
        return _signed_lookup(self.components, self.ring, (i, j, k))

    def is_zero(self) -> bool:
        return not self.components

    def __iter__(self) -> Iterator[Tuple[Tuple[int, int, int], Polynomial]]:
        return iter(sorted(self.components.items()))

    def first_nonzero(self) -> Optional[Tuple[Tuple[int, int, int], Polynomial]]:
        for key, value in self:
            return key, value
        return None

    def __add__(self, other: "PolyTrivector") -> "PolyTrivector":
        if other.ring != self.ring:
            raise RingMismatchError("trivectors live in different rings")
        merged = dict(self.components)
        for key, value in other.components.items():
            merged[key] = poly_add(merged[key], value) if key in merged else value
        return PolyTrivector(self.ring, merged)

    def scale(self, factor) -> "PolyTrivector":
        return PolyTrivector(self.ring, {key: poly_scale(value, factor) for key, value in self.components.items()})

    def degrees(self) -> set:
        return {sum(monom) for value in self.components.values() for monom in value.keys()}


__all__ = ["ChartBivector", "PolyBivector", "PolyTrivector"]
