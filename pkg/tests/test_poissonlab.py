import itertools
import random

import pytest

from decabracket.brackets.fobracket import bracket_table, monomial_table
from decabracket.brackets.schemas import BracketTable
from decabracket.poisson.multivectors import PolyBivector, PolyTrivector
from decabracket.poisson.poissonlab import (
    ambient_jacobi_witness,
    bivector_of,
    chart_restrict,
    charts_agree,
    compatible_on_P5,
    equivariance_holds,
    euler_trivector_solvable,
    euler_wedge,
    is_poisson_on_P5,
    jacobiator,
    mixed_jacobiator,
    pencil_bivector,
    permute_action,
    projective_equal,
    projective_equal_routes,
    random_pencils,
    rank_of_family,
    skew_symmetry_holds,
    support_grading_holds,
    torus_weights,
)
from decabracket.polynomials.multidegree import MultiIndex
from decabracket.polynomials.polynomial import chart_ring, coordinate_ring, parse_polynomial, x_ring

RING = coordinate_ring()
y = RING.gens
C = MultiIndex.of(0, 0, 3)


@pytest.fixture
def mutant():
    """Pi^{01} = y2 y3, Pi^{23} = y0 y4: not Poisson on P^5."""
    return PolyBivector(RING, {(0, 1): y[2] * y[3], (2, 3): y[0] * y[4]})


def test_bivector_storage_is_skew():
    P = PolyBivector(RING, {(1, 0): y[2] ** 2})
    assert P.component(0, 1) == -y[2] ** 2
    assert P.component(1, 0) == y[2] ** 2
    assert P.component(3, 3) == 0
    with pytest.raises(ValueError):
        PolyBivector(RING, {(0, 0): y[0] ** 2})


def test_trivector_is_alternating():
    J = PolyTrivector(RING, {(2, 1, 0): y[0]})
    assert J.component(0, 1, 2) == -y[0]
    assert J.component(1, 2, 0) == -y[0]
    assert J.first_nonzero() == ((0, 1, 2), -y[0])


def test_zero_table_gives_zero_bivector():
    assert bivector_of(bracket_table(x_ring().zero)).is_zero()


def test_chart_restriction():
    P = PolyBivector(RING, {(0, 1): y[2] ** 2})
    on_chart_two = chart_restrict(P, 2)
    assert on_chart_two.indices == (0, 1, 3, 4, 5)
    assert on_chart_two.component(0, 1) == chart_ring(2).one
    u = chart_ring(0).gens
    # Pi~^{1j} = u_j u_2^2 on the chart y_0 = 1
    assert chart_restrict(P, 0).component(0, 1) == u[1] ** 3
    with pytest.raises(ValueError):
        chart_restrict(PolyBivector(RING, {(0, 1): y[0]}), 0)


def test_constant_bivector_has_zero_jacobiator():
    assert jacobiator(PolyBivector(RING, {(0, 1): RING.one, (2, 5): RING(3)})).is_zero()


def test_monomial_tables_are_poisson(tables, bivectors):
    for table, P in zip(tables, bivectors):
        assert is_poisson_on_P5(P), table.name


def test_fermat_table_is_poisson():
    fermat = bracket_table(parse_polynomial("x0^3 + x1^3 + x2^3", x_ring()))
    assert is_poisson_on_P5(bivector_of(fermat))


def test_compatibility_with_first_table(bivectors):
    for other in bivectors[1:]:
        assert compatible_on_P5(bivectors[0], other)


def test_mutated_bivector_is_not_poisson(mutant):
    verdict = is_poisson_on_P5(mutant)
    assert not verdict
    assert verdict.chart is not None
    assert verdict.component is not None and len(verdict.component) == 3
    assert verdict.value not in (None, "0")


def test_mutated_bivector_has_ambient_witness(mutant):
    witness = ambient_jacobi_witness([mutant])
    assert witness is not None
    assert witness.members == (0,)
    assert not witness.chart_verdict


def test_negative_control_witness_is_projectively_harmless(bivectors):
    witness = ambient_jacobi_witness(bivectors)
    assert witness is not None
    assert witness.value != "0"
    assert witness.chart_verdict
    if len(witness.members) == 1:
        assert not jacobiator(bivectors[witness.members[0]]).is_zero()
    else:
        assert not mixed_jacobiator(*(bivectors[i] for i in witness.members)).is_zero()


def test_mixed_jacobiator_polarizes(bivectors):
    P1, P2 = bivectors[0], bivectors[4]
    assert mixed_jacobiator(P1, P1) == jacobiator(P1).scale(2)
    assert jacobiator(P1 + P2) == jacobiator(P1) + jacobiator(P2) + mixed_jacobiator(P1, P2)
    assert mixed_jacobiator(P1, P2) == mixed_jacobiator(P2, P1)


def test_jacobiator_is_quadratic_in_the_bivector(bivectors, mutant):
    for P in (bivectors[3], mutant):
        assert jacobiator(P.scale(3)) == jacobiator(P).scale(9)


def test_projective_equality_modulo_euler(bivectors):
    P = bivectors[-1]
    V = [y[1], RING.zero, 2 * y[3] - y[0], RING.zero, y[5], RING.zero]
    shifted = P + euler_wedge(V)
    assert projective_equal(P, shifted)
    assert charts_agree(P, shifted)
    assert projective_equal(P, P)


def test_projective_inequality(bivectors):
    P = bivectors[-1]
    perturbed = P + PolyBivector(RING, {(0, 1): y[0] ** 2})
    assert projective_equal_routes(P, perturbed) == (False, False)


def test_euler_wedge_vanishes_on_charts():
    E = euler_wedge([y[1], y[0], RING.zero, RING.zero, RING.zero, y[2]])
    assert not E.is_zero()
    assert all(chart_restrict(E, chart).is_zero() for chart in range(6))


def test_euler_wedge_of_euler_field_is_zero():
    assert euler_wedge(list(y)).is_zero()


def test_rank_of_family(tables):
    assert rank_of_family(tables) == 10
    assert rank_of_family(tables[:9] + [tables[0]]) == 9
    assert rank_of_family([bracket_table(x_ring().zero)] * 3) == 0


def test_permute_action_identity_and_involution(tables):
    table = tables[4]
    assert permute_action((0, 1, 2), table) == table
    swap = (1, 0, 2)
    assert permute_action(swap, permute_action(swap, table)) == table
    assert permute_action(swap, monomial_table(C)).label == C


@pytest.mark.parametrize("sigma", [(1, 0, 2), (1, 2, 0)])
def test_equivariance_with_sign_character(sigma):
    for c in (C, MultiIndex.of(2, 1, 0)):
        solve_route, chart_route, _ = equivariance_holds(sigma, monomial_table(c), monomial_table(c.permuted(sigma)))
        assert solve_route and chart_route, c


def test_torus_weights_and_grading(tables):
    assert torus_weights(monomial_table(C)) == {MultiIndex.of(-1, -1, 2)}
    for table in tables:
        assert support_grading_holds(table)
        assert skew_symmetry_holds(table)


def test_support_grading_needs_a_monomial_table():
    fermat = bracket_table(parse_polynomial("x0^3 + x1^3", x_ring()))
    with pytest.raises(ValueError):
        support_grading_holds(fermat)


def test_ambient_jacobiator_is_euler_type(bivectors):
    assert euler_trivector_solvable(jacobiator(bivectors[0]))
    assert euler_trivector_solvable(PolyTrivector(RING))
    assert not euler_trivector_solvable(PolyTrivector(RING, {(0, 1, 2): y[0] ** 2}))


def test_random_pencils_are_reproducible_and_poisson(bivectors):
    first = random_pencils(random.Random(7), 5)
    assert first == random_pencils(random.Random(7), 5)
    for sample in first:
        assert sample.first != sample.second
        assert sample.lambda1 != 0 and sample.lambda2 != 0
    for sample in first[:3]:
        assert is_poisson_on_P5(pencil_bivector(bivectors, sample)), sample.describe()


def test_pairwise_sum_is_poisson(bivectors):
    for i, j in itertools.islice(itertools.combinations(range(10), 2), 5):
        assert is_poisson_on_P5(bivectors[i] + bivectors[j])


def test_bracket_table_roundtrip_through_bivector(tables):
    table = tables[0]
    P = bivector_of(table)
    assert isinstance(table, BracketTable)
    assert not P.is_zero()
