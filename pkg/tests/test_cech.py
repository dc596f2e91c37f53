import pytest

from decabracket.homotopy.cech import (
    BOTTOM,
    CechBasisElement,
    CechElement,
    CohomologyClass,
    MixedDegreeError,
    basis_elements,
    differential,
    homotopy_q,
    include,
    k_of,
    multiply,
    project,
)
from decabracket.polynomials.multidegree import MultiIndex
from decabracket.polynomials.polynomial import x_ring
from decabracket.verification.suites import homotopy_failure, product_failure

X100 = MultiIndex.of(1, 0, 0)


def basis(indices, *exponent):
    return CechElement.basis(indices, MultiIndex(exponent))


def test_basis_element_regularity():
    assert CechBasisElement((0, 1), MultiIndex.of(-1, 2, 0)).degree == 1
    with pytest.raises(ValueError):
        CechBasisElement((1, 2), MultiIndex.of(-1, 2, 0))
    with pytest.raises(ValueError):
        CechBasisElement((1, 0), X100)
    with pytest.raises(ValueError):
        CechBasisElement((0, 3), X100)
    with pytest.raises(ValueError):
        CechBasisElement((), X100)


def test_twist_and_degree():
    element = CechBasisElement((0, 1, 2), MultiIndex.of(-2, -2, -1))
    assert element.degree == 2
    assert element.twist == -5
    assert element.n == 2


@pytest.mark.parametrize(
    "exponent,expected",
    [((-1, -1, -1), BOTTOM), ((0, -1, -1), 0), ((1, 2, -1), 1), ((3, -2, 0), 2)],
)
def test_k_of(exponent, expected):
    assert k_of(MultiIndex(exponent)) == expected


def test_differential_signs():
    assert differential(basis((0,), 1, 0, 0)) == -basis((0, 1), 1, 0, 0) - basis((0, 2), 1, 0, 0)
    assert differential(basis((1,), 1, 0, 0)) == basis((0, 1), 1, 0, 0) - basis((1, 2), 1, 0, 0)
    assert differential(basis((0, 1, 2), -2, -2, -1)).is_zero()


def test_differential_kills_polynomials():
    assert differential(include(CohomologyClass.monomial(X100))).is_zero()


def test_homotopy_q():
    assert homotopy_q(basis((0, 2), 1, 0, 0)) == -basis((0,), 1, 0, 0)
    assert homotopy_q(basis((1, 2), 0, 0, -1)) == basis((2,), 0, 0, -1)
    assert homotopy_q(basis((0, 1), 1, 0, 0)).is_zero()
    assert homotopy_q(basis((2,), 1, 0, 0)).is_zero()
    assert homotopy_q(basis((0, 1, 2), -1, -1, -1)).is_zero()


def test_project_and_include():
    polynomial = CohomologyClass.monomial(X100)
    assert include(polynomial) == basis((0,), 1, 0, 0) + basis((1,), 1, 0, 0) + basis((2,), 1, 0, 0)
    assert project(include(polynomial)) == polynomial
    assert project(basis((0,), 1, 0, 0)).is_zero()
    top = CohomologyClass.monomial(MultiIndex.of(-2, -2, -1), 3)
    assert include(top) == basis((0, 1, 2), -2, -2, -1).scale(3)
    assert project(include(top)) == top
    assert project(basis((0, 1, 2), -2, 0, -1)).is_zero()


def test_include_accepts_polynomials():
    x0, x1, _ = x_ring().gens
    h = include(x0 ** 2 - x1, 2)
    assert project(h) == CohomologyClass.from_polynomial(x0 ** 2 - x1)


def test_include_rejects_mixed_degrees():
    mixed = CohomologyClass.from_terms(2, [(X100, 1), (MultiIndex.of(-1, -1, -1), 1)])
    with pytest.raises(MixedDegreeError):
        include(mixed)


def test_cohomology_class_rejects_non_basis_monomials():
    with pytest.raises(ValueError):
        CohomologyClass.monomial(MultiIndex.of(-1, 0, -1))


def test_identity_minus_iota_pi():
    x = basis((2,), 1, 0, 0)
    assert x - include(project(x)) == -basis((0,), 1, 0, 0) - basis((1,), 1, 0, 0)
    assert differential(homotopy_q(x)) + homotopy_q(differential(x)) == x - include(project(x))


@pytest.mark.parametrize("n,bound", [(1, 2), (2, 1), (3, 1)])
def test_homotopy_identities_on_small_boxes(n, bound):
    for element in basis_elements(n, bound):
        assert homotopy_failure(CechElement.from_terms(n, [(element, 1)])) is None, element


def test_product_requires_matching_indices():
    left = basis((0,), 1, 0, 0)
    right = basis((0, 1), 0, 2, 0)
    assert multiply(left, right) == basis((0, 1), 1, 2, 0)
    assert multiply(basis((1,), 1, 0, 0), right).is_zero()
    assert multiply(basis((0, 1), 0, -1, 0), basis((1, 2), 0, 0, -1)) == basis((0, 1, 2), 0, -1, -1)


def test_product_laws_on_chains():
    chain = [basis((0,), 1, 0, 0), basis((0, 1), -1, -1, 2), basis((1, 2), 0, 1, -3)]
    assert product_failure(*chain) is None
    assert product_failure(basis((0, 1), 1, -1, 0), basis((1,), 0, 2, 0), basis((1, 2), 0, 0, -1)) is None


def test_basis_elements_counts():
    # P^1 with |e_i| <= 0: x^0 on U_0, U_1 and U_01
    assert len(basis_elements(1, 0)) == 3
    with pytest.raises(ValueError):
        basis_elements(0, 1)


@pytest.mark.parametrize(
    "exponent,expected",
    [((-1, 2, -3), 1), ((-1, -1, -3), BOTTOM), ((0, 0, 0), 2)],
)
def test_k_of_reference_values(exponent, expected):
    assert k_of(MultiIndex(exponent)) == expected


def test_homotopy_q_on_top_degree():
    assert homotopy_q(basis((0, 1, 2), -1, 2, -3)) == -basis((0, 2), -1, 2, -3)
    assert homotopy_q(basis((0, 1, 2), 2, -1, -1)) == basis((1, 2), 2, -1, -1)
    assert homotopy_q(basis((0, 1), -1, -1, 3)).is_zero()


def test_product_with_top_degree_class():
    assert multiply(basis((0,), 2, 0, 0), basis((0, 1, 2), -2, -2, -1)) == basis((0, 1, 2), 0, -2, -1)
    assert multiply(basis((0, 1), 0, -1, 0), basis((0, 1), 0, -1, 0)).is_zero()


def test_project_top_degree():
    assert project(basis((0, 1, 2), 1, -2, -2)).is_zero()
    assert project(basis((0, 1, 2), -1, -2, -2)) == CohomologyClass.monomial(MultiIndex.of(-1, -2, -2))
    x0, x1, _ = x_ring().gens
    assert project(include(x0 * x1)) == CohomologyClass.from_polynomial(x0 * x1)


def test_graded_parts():
    x = basis((0,), 1, 0, 0) + basis((0, 1), 1, 0, 0) + basis((0, 1), -1, 3, 0)
    assert x.degree_part(0) == basis((0,), 1, 0, 0)
    assert x.degree_part(1) == basis((0, 1), 1, 0, 0) + basis((0, 1), -1, 3, 0)
    assert x.degree_part(2).is_zero()
    assert x.twist_part(2) == basis((0, 1), -1, 3, 0)
    assert x.isotypic_part(X100) == basis((0,), 1, 0, 0) + basis((0, 1), 1, 0, 0)
    assert x.degree_part(0) + x.degree_part(1) == x


def test_homotopy_failure_names_the_broken_piece(monkeypatch):
    monkeypatch.setattr("decabracket.verification.suites.homotopy_q", lambda x: CechElement.zero(x.n))
    assert homotopy_failure(basis((0, 1), 1, 0, 0)) == "id - iota pi != dQ + Qd on the piece x^(1,0,0)"


def test_cohomology_class_coefficient():
    h = CohomologyClass.monomial(MultiIndex.of(-2, -2, -1), 3)
    assert h.coefficient(MultiIndex.of(-2, -2, -1)) == 3
    assert h.coefficient(MultiIndex.of(-1, -1, -1)) == 0
