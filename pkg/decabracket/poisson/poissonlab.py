"""
Verification calculus for quadratic bivectors on the ambient space of P^5.

A bracket table gives a bivector Pi on the six coordinates y. It induces a
bivector on P^5, whose restriction to the chart {y_m != 0} is

    Pi~^{ij}(u) = Pi^{ij}(u) - u_i Pi^{mj}(u) - u_j Pi^{im}(u),   u_m = 1.

The Poisson property on P^5 is the vanishing of the chart Jacobiators. Two
bivectors induce the same bivector on P^5 when their difference is E ^ V for
the Euler field E and a linear vector field V; this is decided by an exact
linear solve and, independently, by comparing chart restrictions.
"""

from __future__ import annotations

import itertools
import logging
import random
from dataclasses import dataclass
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple

from sympy import QQ

from decabracket.brackets.schemas import BracketTable, coordinate_position, split_quadratic
from decabracket.config import PENCIL_DENOMINATOR_RANGE, PENCIL_NUMERATOR_RANGE
from decabracket.poisson.multivectors import ChartBivector, PolyBivector, PolyTrivector
from decabracket.polynomials.linear_algebra import is_consistent, matrix_rank
from decabracket.polynomials.multidegree import MultiIndex, Permutation, delta_set, permutation_sign
from decabracket.polynomials.polynomial import (
    Polynomial,
    RingMismatchError,
    chart_ring,
    coordinate_labels,
    coordinate_ring,
    format_rational,
    is_homogeneous,
    poly_mul,
    poly_sub,
    render,
)

logger = logging.getLogger(__name__)

CHARTS = tuple(range(6))


@dataclass(frozen=True)
class PoissonVerdict:
    """Outcome of a chart-by-chart Jacobi check; falsy when a witness was found."""

    holds: bool
    chart: Optional[int] = None
    component: Optional[Tuple[int, int, int]] = None
    value: Optional[str] = None

    def __bool__(self) -> bool:
        return self.holds


@dataclass(frozen=True)
class AmbientWitness:
    """A bivector (or sum of two) whose ambient Jacobiator does not vanish."""

    members: Tuple[int, ...]
    component: Tuple[int, int, int]
    value: str
    chart_verdict: PoissonVerdict


@dataclass(frozen=True)
class PencilSample:
    first: int
    second: int
    lambda1: object
    lambda2: object

    def describe(self) -> str:
        return (
            f"{format_rational(self.lambda1)}*P{self.first} + {format_rational(self.lambda2)}*P{self.second}"
        )


def bivector_of(table: BracketTable) -> PolyBivector:
    """Pi^{ij} = {x^a_i, x^a_j} in the fixed coordinate order."""
    components = {
        (coordinate_position(a), coordinate_position(b)): value for (a, b), value in table.entries.items()
    }
    return PolyBivector(coordinate_ring(), components)


def euler_wedge(linear_forms: Sequence[Polynomial]) -> PolyBivector:
    """E ^ V with components y_i V^j - y_j V^i."""
    ring = coordinate_ring()
    if len(linear_forms) != ring.ngens:
        raise ValueError(f"need {ring.ngens} components of V, got {len(linear_forms)}")
    y = ring.gens
    components = {
        (i, j): poly_sub(poly_mul(y[i], linear_forms[j]), poly_mul(y[j], linear_forms[i]))
        for i in range(ring.ngens)
        for j in range(i + 1, ring.ngens)
    }
    return PolyBivector(ring, components)


def _dehomogenize(p: Polynomial, chart: int) -> Polynomial:
    ring = chart_ring(chart)
    terms: Dict[Tuple[int, ...], object] = {}
    for monom, coeff in p.items():
        local = monom[:chart] + monom[chart + 1:]
        terms[local] = terms.get(local, 0) + coeff
    return ring.from_dict(terms)


def _check_quadratic(P: PolyBivector) -> None:
    if P.ring != coordinate_ring():
        raise RingMismatchError(f"expected a bivector in the six coordinates, got {P.ring.ngens} variables")
    for key, value in P.components.items():
        if not is_homogeneous(value, 2):
            raise ValueError(f"component {key} is not a quadratic form: {render(value)}")


def chart_restrict(P: PolyBivector, chart: int) -> ChartBivector:
    """
    Restrict a quadratic bivector to the chart {y_chart != 0}.

    Raises:
        ValueError: if a component is not homogeneous quadratic or the chart is out of range
    """
    _check_quadratic(P)
    ring = chart_ring(chart)
    indices = tuple(i for i in range(P.size) if i != chart)
    local_of = {i: p for p, i in enumerate(indices)}
    u = ring.gens
    components = {}
    for i, j in itertools.combinations(indices, 2):
        value = poly_sub(
            poly_sub(
                _dehomogenize(P.component(i, j), chart),
                poly_mul(u[local_of[i]], _dehomogenize(P.component(chart, j), chart)),
            ),
            poly_mul(u[local_of[j]], _dehomogenize(P.component(i, chart), chart)),
        )
        if value != 0:
            components[(local_of[i], local_of[j])] = value
    return ChartBivector(ring, components, chart=chart, indices=indices)


def _pairing(P: PolyBivector, R: PolyBivector) -> PolyTrivector:
    # sum_l P^{il} d_l R^{jk} + P^{jl} d_l R^{ki} + P^{kl} d_l R^{ij}
    if P.ring != R.ring:
        raise RingMismatchError(f"bivectors live in different rings: {P.ring.ngens} vs {R.ring.ngens} variables")
    ring = P.ring
    size = ring.ngens
    derivatives = {key: [value.diff(l) for l in range(size)] for key, value in R.components.items()}

    def d_r(j: int, k: int, l: int) -> Polynomial:
        if j == k:
            return ring.zero
        if j < k:
            values = derivatives.get((j, k))
            return values[l] if values is not None else ring.zero
        values = derivatives.get((k, j))
        return -values[l] if values is not None else ring.zero

    components = {}
    for i, j, k in itertools.combinations(range(size), 3):
        total = ring.zero
        for l in range(size):
            for first, second, third in ((i, j, k), (j, k, i), (k, i, j)):
                coefficient = P.component(first, l)
                if coefficient == 0:
                    continue
                derivative = d_r(second, third, l)
                if derivative != 0:
                    total += poly_mul(coefficient, derivative)
        if total != 0:
            components[(i, j, k)] = total
    return PolyTrivector(ring, components)


def jacobiator(P: PolyBivector) -> PolyTrivector:
    """J^{ijk} = sum_l (Pi^{il} d_l Pi^{jk} + Pi^{jl} d_l Pi^{ki} + Pi^{kl} d_l Pi^{ij})."""
    return _pairing(P, P)


def mixed_jacobiator(P1: PolyBivector, P2: PolyBivector) -> PolyTrivector:
    """Polarization J(P1 + P2) - J(P1) - J(P2)."""
    return _pairing(P1, P2) + _pairing(P2, P1)


def _verdict(trivector: PolyTrivector, restricted: ChartBivector) -> Optional[PoissonVerdict]:
    witness = trivector.first_nonzero()
    if witness is None:
        return None
    key, value = witness
    # report the component in ambient coordinate indices
    component = tuple(restricted.indices[p] for p in key)
    return PoissonVerdict(False, chart=restricted.chart, component=component, value=render(value))


def is_poisson_on_P5(P: PolyBivector) -> PoissonVerdict:
    """True iff the Jacobiator vanishes identically on all six charts; otherwise names a witness."""
    for chart in CHARTS:
        restricted = chart_restrict(P, chart)
        failure = _verdict(jacobiator(restricted), restricted)
        if failure is not None:
            logger.info(f"[POISSON] Jacobi fails on chart {chart} at {failure.component}: {failure.value}")
            return failure
    return PoissonVerdict(True)


def compatible_on_P5(P1: PolyBivector, P2: PolyBivector) -> PoissonVerdict:
    """True iff the mixed Jacobiator vanishes on every chart."""
    for chart in CHARTS:
        first, second = chart_restrict(P1, chart), chart_restrict(P2, chart)
        failure = _verdict(mixed_jacobiator(first, second), first)
        if failure is not None:
            return failure
    return PoissonVerdict(True)


def _quadratic_monomials(size: int) -> List[Tuple[int, ...]]:
    return [label.entries for label in delta_set(2, size)]


def _cubic_monomials(size: int) -> List[Tuple[int, ...]]:
    return [label.entries for label in delta_set(3, size)]


def _minus_unit(monom: Tuple[int, ...], i: int) -> Optional[Tuple[int, ...]]:
    if monom[i] == 0:
        return None
    return monom[:i] + (monom[i] - 1,) + monom[i + 1:]


def _unit_position(monom: Tuple[int, ...]) -> int:
    return monom.index(1)


def projective_equal(P1: PolyBivector, P2: PolyBivector) -> bool:
    """
    Decide P1 - P2 = E ^ V with V linear by an exact linear solve.

    The unknowns are the 36 coefficients v[j][l] of V^j = sum_l v[j][l] y_l; there is
    one equation per component pair and quadratic monomial.
    """
    difference = P1 - P2
    if difference.is_zero():
        return True
    if difference.ring != coordinate_ring() or difference.degrees() != {2}:
        return False
    size = difference.size
    rows = []
    rhs = []
    for i, j in itertools.combinations(range(size), 2):
        target = difference.component(i, j)
        for monom in _quadratic_monomials(size):
            row: Dict[Tuple[int, int], int] = {}
            rest = _minus_unit(monom, i)
            if rest is not None:
                key = (j, _unit_position(rest))
                row[key] = row.get(key, 0) + 1
            rest = _minus_unit(monom, j)
            if rest is not None:
                key = (i, _unit_position(rest))
                row[key] = row.get(key, 0) - 1
            rows.append(row)
            rhs.append(target.get(monom, 0))
    return is_consistent(rows, rhs)


def charts_agree(P1: PolyBivector, P2: PolyBivector) -> bool:
    """Second route: the six chart restrictions coincide."""
    return all(chart_restrict(P1, chart) == chart_restrict(P2, chart) for chart in CHARTS)


def projective_equal_routes(P1: PolyBivector, P2: PolyBivector) -> Tuple[bool, bool]:
    return projective_equal(P1, P2), charts_agree(P1, P2)


def euler_trivector_solvable(J: PolyTrivector) -> bool:
    """
    Decide J = E ^ W for a skew array W of quadratic forms.

    J^{ijk} = y_i W^{jk} + y_j W^{ki} + y_k W^{ij}; 315 unknowns, one equation per
    component and cubic monomial.
    """
    if J.is_zero():
        return True
    if J.degrees() != {3}:
        return False
    size = J.size
    rows = []
    rhs = []
    for i, j, k in itertools.combinations(range(size), 3):
        target = J.component(i, j, k)
        for monom in _cubic_monomials(size):
            row: Dict[Tuple[Tuple[int, int], Tuple[int, ...]], int] = {}
            # y_i W^{jk} + y_j W^{ki} + y_k W^{ij}, with W^{ki} = -W^{ik}
            for variable, pair, sign in ((i, (j, k), 1), (j, (i, k), -1), (k, (i, j), 1)):
                rest = _minus_unit(monom, variable)
                if rest is not None:
                    key = (pair, rest)
                    row[key] = row.get(key, 0) + sign
            rows.append(row)
            rhs.append(target.get(monom, 0))
    return is_consistent(rows, rhs)


def rank_of_family(tables: Sequence[BracketTable]) -> int:
    """Exact rank of the coefficient matrix with one row per table (15 pairs x 21 monomials)."""
    rows = []
    for table in tables:
        row = {}
        for pair, value in table.entries.items():
            for monom, coeff in value.items():
                row[(pair, monom)] = coeff
        rows.append(row)
    return matrix_rank(rows)


def permute_coordinates(sigma: Permutation, p: Polynomial) -> Polynomial:
    """Relabel y_a -> y_{sigma.a} inside a polynomial in the six coordinates."""
    labels = coordinate_labels()
    target = [labels.index(label.permuted(sigma)) for label in labels]
    terms = {}
    for monom, coeff in p.items():
        moved = [0] * len(labels)
        for k, e in enumerate(monom):
            moved[target[k]] += e
        terms[tuple(moved)] = coeff
    return p.ring.from_dict(terms)


def permute_action(sigma: Permutation, table: BracketTable) -> BracketTable:
    """
    Transport a table along a permutation of x0, x1, x2.

    The cubic x^c becomes x^{sigma.c} and every coordinate y_a inside every entry
    becomes y_{sigma.a}, where (sigma.e)[sigma[i]] = e[i].
    """
    cubic_terms = {MultiIndex(m).permuted(sigma).entries: coeff for m, coeff in table.cubic.items()}
    cubic = table.cubic.ring.from_dict(cubic_terms)
    entries = {}
    for (a, b), value in table.entries.items():
        moved = permute_coordinates(sigma, value)
        a_new, b_new = a.permuted(sigma), b.permuted(sigma)
        if coordinate_position(a_new) < coordinate_position(b_new):
            entries[(a_new, b_new)] = moved
        else:
            entries[(b_new, a_new)] = -moved
    return BracketTable(cubic, entries)


def equivariance_holds(sigma: Permutation, table: BracketTable, target: BracketTable) -> Tuple[bool, bool, bool]:
    """
    Compare the transported table with sgn(sigma) * target.

    Returns:
        (linear-solve verdict, chart verdict, exact ambient equality)
    """
    transported = bivector_of(permute_action(sigma, table))
    expected = bivector_of(target).scale(permutation_sign(sigma))
    solve_route, chart_route = projective_equal_routes(transported, expected)
    return solve_route, chart_route, transported == expected


def torus_weights(table: BracketTable) -> FrozenSet[MultiIndex]:
    """Characters a' + b' - a - b of the diagonal torus over all terms of the table."""
    weights = set()
    for (a, b), value in table.entries.items():
        for monom in value.keys():
            aprime, bprime = split_quadratic(monom)
            weights.add(aprime + bprime - a - b)
    return frozenset(weights)


def support_grading_holds(table: BracketTable) -> bool:
    """Every term y_a' y_b' of {x^a, x^b}_c has a' + b' = a + b + c - (1, 1, 1)."""
    label = table.label
    if label is None:
        raise ValueError("support grading is defined for monomial tables only")
    return torus_weights(table) <= {label - MultiIndex.of(1, 1, 1)}


def skew_symmetry_holds(table: BracketTable) -> bool:
    labels = coordinate_labels()
    return all(
        table.entry(a, b) == -table.entry(b, a) for a in labels for b in labels
    ) and all(table.entry(a, a) == 0 for a in labels)


def ambient_jacobi_witness(bivectors: Sequence[PolyBivector]) -> Optional[AmbientWitness]:
    """
    Find a bivector, then a sum of two, whose 6-variable Jacobiator is nonzero.

    Returns:
        The first witness found, or None if every ambient Jacobiator vanishes
    """
    for index, P in enumerate(bivectors):
        witness = jacobiator(P).first_nonzero()
        if witness is not None:
            key, value = witness
            return AmbientWitness((index,), key, render(value), is_poisson_on_P5(P))
    logger.info("[POISSON] all single ambient Jacobiators vanish; scanning pairs")
    for first, second in itertools.combinations(range(len(bivectors)), 2):
        P1, P2 = bivectors[first], bivectors[second]
        witness = mixed_jacobiator(P1, P2).first_nonzero()
        if witness is not None:
            key, value = witness
            return AmbientWitness((first, second), key, render(value), compatible_on_P5(P1, P2))
    return None


def _random_rational(rng: random.Random):
    numerator = 0
    while numerator == 0:
        numerator = rng.randint(*PENCIL_NUMERATOR_RANGE)
    return QQ(numerator, rng.randint(*PENCIL_DENOMINATOR_RANGE))


def random_pencils(rng: random.Random, count: int, family_size: int = 10) -> List[PencilSample]:
    """Draw pencils lambda1 * P_i + lambda2 * P_j with i != j and nonzero rational lambdas."""
    samples = []
    for _ in range(count):
        first, second = sorted(rng.sample(range(family_size), 2))
        samples.append(PencilSample(first, second, _random_rational(rng), _random_rational(rng)))
    return samples


def pencil_bivector(bivectors: Sequence[PolyBivector], sample: PencilSample) -> PolyBivector:
    return bivectors[sample.first].scale(sample.lambda1) + bivectors[sample.second].scale(sample.lambda2)


__all__ = [
    "AmbientWitness",
    "CHARTS",
    "PencilSample",
    "PoissonVerdict",
    "ambient_jacobi_witness",
    "bivector_of",
    "chart_restrict",
    "charts_agree",
    "compatible_on_P5",
    "equivariance_holds",
    "euler_trivector_solvable",
    "euler_wedge",
    "is_poisson_on_P5",
    "jacobiator",
    "mixed_jacobiator",
    "pencil_bivector",
    "permute_action",
    "permute_coordinates",
    "projective_equal",
    "projective_equal_routes",
    "random_pencils",
    "rank_of_family",
    "skew_symmetry_holds",
    "support_grading_holds",
    "torus_weights",
]
