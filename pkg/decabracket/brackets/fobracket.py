"""
The ten quadratic Poisson brackets on P^5 attached to plane cubics.

For a cubic monomial x^c the bracket of two coordinates x^a, x^b (a, b in
Delta(2)) is the quadratic form

    {x^a, x^b}_c = sum_{a', b'} [ sum_sigma -sgn(sigma) rho~(sigma(a, b, c), a', b') ] y_a' y_b'

where sigma runs over the six ways of placing a, b, c into the three slots of
rho~. Brackets for a general cubic F are the linear combination over its
monomials. An independent route builds the same quadratic form from the m4
products m4(F, s1, e, s2) - m4(s1, F, e, s2) and the Serre pairing.
"""

from __future__ import annotations

import logging
from functools import lru_cache
from typing import Dict, FrozenSet, List, Sequence, Tuple

from decabracket.brackets.schemas import BracketTable, canonical_pairs
from decabracket.config import CUBIC_DEGREE, SECTION_DEGREE, SERRE_DEGREE
from decabracket.homotopy.ainf import M4Ordering, m4_closed, m4_tree_for, rho
from decabracket.homotopy.cech import CohomologyClass
from decabracket.polynomials.multidegree import (
    MultiIndex,
    Permutation,
    all_permutations,
    delta_set,
    permutation_sign,
    star,
)
from decabracket.polynomials.polynomial import (
    Polynomial,
    RingMismatchError,
    coordinate_labels,
    coordinate_ring,
    is_homogeneous,
    x_ring,
)

logger = logging.getLogger(__name__)

SLOT_PERMUTATIONS: Tuple[Permutation, ...] = tuple(all_permutations(3))
IDENTITY: Permutation = (0, 1, 2)
SWAP_AB: Permutation = (1, 0, 2)
M4_ENGINES = ("closed", "tree")


def rho_tilde(a: MultiIndex, b: MultiIndex, c: MultiIndex, aprime: MultiIndex, bprime: MultiIndex) -> int:
    return int(
        aprime[0] <= a[0] - 1
        and aprime[1] > a[1] - 1
        and aprime[1] <= a[1] + b[1] - 1
        and a[2] + b[2] < aprime[2] + 1
        and c[2] + a[2] + b[2] >= aprime[2] + 1
        and aprime[0] + bprime[0] == a[0] + b[0] + c[0] - 1
        and aprime[1] + bprime[1] == a[1] + b[1] + c[1] - 1
    )


def delta_match(alpha: MultiIndex, beta: MultiIndex, a: MultiIndex, b: MultiIndex, c: MultiIndex) -> int:
    """1 exactly when alpha + beta + a + b + c = (-1, ..., -1)."""
    total = alpha + beta + a + b + c
    return int(all(value == -1 for value in total))


def slot(sigma: Permutation, a: MultiIndex, b: MultiIndex, c: MultiIndex) -> Tuple[MultiIndex, MultiIndex, MultiIndex]:
    """Slot i receives the sigma[i]-th of (a, b, c)."""
    vectors = (a, b, c)
    return vectors[sigma[0]], vectors[sigma[1]], vectors[sigma[2]]


def sigma_term(sigma: Permutation, a: MultiIndex, b: MultiIndex, c: MultiIndex, aprime: MultiIndex, bprime: MultiIndex) -> int:
    return -permutation_sign(sigma) * rho_tilde(*slot(sigma, a, b, c), aprime, bprime)


def bracket_coefficient(c: MultiIndex, a: MultiIndex, b: MultiIndex, aprime: MultiIndex, bprime: MultiIndex) -> int:
    """Coefficient of the ordered pair (a', b') in {x^a, x^b}_c."""
    return sum(sigma_term(sigma, a, b, c, aprime, bprime) for sigma in SLOT_PERMUTATIONS)


def _coordinate_monomial(aprime: MultiIndex, bprime: MultiIndex) -> Tuple[int, ...]:
    labels = coordinate_labels()
    exponent = [0] * len(labels)
    exponent[labels.index(aprime)] += 1
    exponent[labels.index(bprime)] += 1
    return tuple(exponent)


def _quadratic_form(coefficients: Dict[Tuple[MultiIndex, MultiIndex], object]) -> Polynomial:
    ring = coordinate_ring()
    terms: Dict[Tuple[int, ...], object] = {}
    for (aprime, bprime), coeff in coefficients.items():
        if coeff:
            monom = _coordinate_monomial(aprime, bprime)
            terms[monom] = terms.get(monom, 0) + coeff
    return ring.from_dict(terms)


def _check_entry_arguments(c: MultiIndex, a: MultiIndex, b: MultiIndex) -> None:
    if c.total != CUBIC_DEGREE or not c.is_nonnegative() or len(c) != 3:
        raise ValueError(f"c = {c} is not in Delta({CUBIC_DEGREE})")
    for name, value in (("a", a), ("b", b)):
        if value.total != SECTION_DEGREE or not value.is_nonnegative() or len(value) != 3:
            raise ValueError(f"{name} = {value} is not in Delta({SECTION_DEGREE})")


@lru_cache(maxsize=None)
def _bracket_entry_cached(c: MultiIndex, a: MultiIndex, b: MultiIndex) -> Polynomial:
    labels = coordinate_labels()
    coefficients = {
        (aprime, bprime): bracket_coefficient(c, a, b, aprime, bprime)
        for aprime in labels
        for bprime in labels
    }
    return _quadratic_form(coefficients)


def bracket_entry(c: MultiIndex, a: MultiIndex, b: MultiIndex) -> Polynomial:
    """
    {x^a, x^b}_{x^c} as a quadratic polynomial in the six coordinates.

    Args:
        c: Cubic exponent in Delta(3)
        a: Left argument in Delta(2)
        b: Right argument in Delta(2)

    Returns:
        Quadratic form in y_200, ..., y_002
    """
    _check_entry_arguments(c, a, b)
    return _bracket_entry_cached(c, a, b).copy()


@lru_cache(maxsize=None)
def monomial_table(c: MultiIndex) -> BracketTable:
    if c.total != CUBIC_DEGREE or not c.is_nonnegative() or len(c) != 3:
        raise ValueError(f"c = {c} is not in Delta({CUBIC_DEGREE})")
    entries = {(a, b): bracket_entry(c, a, b) for a, b in canonical_pairs()}
    logger.debug(f"[TABLES] built table for c={c}")
    return BracketTable(x_ring().from_dict({c.entries: 1}), entries)


def monomial_tables() -> List[BracketTable]:
    """The ten tables, one per c in Delta(3), in Delta(3) order."""
    return [monomial_table(c) for c in delta_set(CUBIC_DEGREE)]


def bracket_table(cubic: Polynomial) -> BracketTable:
    """
    Table of {,}_F for a homogeneous cubic F in x0, x1, x2.

    Raises:
        RingMismatchError: if F is not a polynomial in x0, x1, x2
        ValueError: if F is not homogeneous of degree 3
    """
    ring = x_ring()
    if cubic.ring != ring:
        raise RingMismatchError(f"F must be a polynomial in x0, x1, x2, got ring with {cubic.ring.ngens} variables")
    if not is_homogeneous(cubic, CUBIC_DEGREE):
        raise ValueError(f"F must be homogeneous of degree {CUBIC_DEGREE}, got monomial degrees {sorted(sum(m) for m in cubic.keys())}")
    coordinates = coordinate_ring()
    entries = {pair: coordinates.zero for pair in canonical_pairs()}
    for exponent, coeff in cubic.items():
        table = monomial_table(MultiIndex(exponent))
        for pair in entries:
            entries[pair] = entries[pair] + table.entries[pair] * coeff
    return BracketTable(cubic.copy(), entries)


def _m4_difference(c: MultiIndex, a: MultiIndex, b: MultiIndex, alpha: MultiIndex, engine: str) -> CohomologyClass:
    # m4(F, s1, e, s2) - m4(s1, F, e, s2): e sits third, before the last polynomial argument
    if engine == "closed":
        return m4_closed(M4Ordering.FGEH, alpha, c, a, b) - m4_closed(M4Ordering.FGEH, alpha, a, c, b)
    if engine == "tree":
        return m4_tree_for(M4Ordering.FGEH, alpha, c, a, b) - m4_tree_for(M4Ordering.FGEH, alpha, a, c, b)
    raise ValueError(f"unknown m4 engine {engine!r}; expected one of {M4_ENGINES}")


def bracket_via_m4(c: MultiIndex, a: MultiIndex, b: MultiIndex, engine: str = "closed") -> Polynomial:
    """
    The same bracket entry rebuilt from m4 and the Serre pairing.

    With e = sum_alpha t_alpha x^alpha_{012}, the quadratic form
    <e, m4(x^c, x^a, e, x^b) - m4(x^a, x^c, e, x^b)> is expanded in the t_alpha
    and rewritten in the coordinates through t_alpha <-> y_{alpha*}.

    Args:
        c: Cubic exponent in Delta(3)
        a: Left argument in Delta(2)
        b: Right argument in Delta(2)
        engine: 'closed' for the rho formulas, 'tree' for the tree sum

    Returns:
        Quadratic form in y_200, ..., y_002
    """
    _check_entry_arguments(c, a, b)
    serre_basis = set(delta_set(SERRE_DEGREE))
    coefficients: Dict[Tuple[MultiIndex, MultiIndex], object] = {}
    for alpha in delta_set(SERRE_DEGREE):
        difference = _m4_difference(c, a, b, alpha, engine)
        for exponent, coeff in difference.terms.items():
            # <x^gamma, x^beta_{012}> = 1 exactly when gamma + beta = (-1, -1, -1)
            beta = star(exponent)
            if beta not in serre_basis:
                continue
            if not delta_match(alpha, beta, a, b, c):
                raise RuntimeError(f"m4 output x^{exponent} for alpha={alpha} has the wrong multidegree")
            key = (star(alpha), star(beta))
            coefficients[key] = coefficients.get(key, 0) + coeff
    return _quadratic_form(coefficients)


def contributing_permutations(c: MultiIndex) -> FrozenSet[Permutation]:
    """Slot permutations sigma with a nonzero rho~ term for some a, b, a', b'."""
    labels = coordinate_labels()
    found = set()
    for sigma in SLOT_PERMUTATIONS:
        if any(
            rho_tilde(*slot(sigma, a, b, c), aprime, bprime)
            for a in labels
            for b in labels
            for aprime in labels
            for bprime in labels
        ):
            found.add(sigma)
    return frozenset(found)


def rho_identity_holds(
    sigma: Permutation,
    a: MultiIndex,
    b: MultiIndex,
    c: MultiIndex,
    alpha: MultiIndex,
    beta: MultiIndex,
) -> bool:
    """rho~(sigma(a, b, c), alpha*, beta*) == rho(alpha; sigma(a, b, c)) * delta(alpha, beta, a, b, c)."""
    slotted = slot(sigma, a, b, c)
    left = rho_tilde(*slotted, star(alpha), star(beta))
    right = rho(alpha, *slotted) * delta_match(alpha, beta, a, b, c)
    return left == right


def entry_triples() -> List[Tuple[MultiIndex, MultiIndex, MultiIndex]]:
    """All 360 triples (c, a, b) with c in Delta(3) and a, b in Delta(2)."""
    labels = coordinate_labels()
    return [(c, a, b) for c in delta_set(CUBIC_DEGREE) for a in labels for b in labels]


__all__ = [
    "IDENTITY",
    "M4_ENGINES",
    "SLOT_PERMUTATIONS",
    "SWAP_AB",
    "bracket_coefficient",
    "bracket_entry",
    "bracket_table",
    "bracket_via_m4",
    "contributing_permutations",
    "delta_match",
    "entry_triples",
    "monomial_table",
    "monomial_tables",
    "rho_identity_holds",
    "rho_tilde",
    "sigma_term",
    "slot",
]
