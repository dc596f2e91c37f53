"""
Exponent-vector combinatorics and exact polynomial arithmetic.
"""

from decabracket.polynomials.linear_algebra import is_consistent, matrix_rank
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
    as_fraction,
    chart_ring,
    coordinate_labels,
    coordinate_names,
    coordinate_ring,
    format_monomial,
    format_rational,
    is_homogeneous,
    monomial,
    parse_multi_index,
    parse_polynomial,
    poly_add,
    poly_mul,
    poly_scale,
    poly_sub,
    poly_sum,
    render,
    render_latex,
    to_rational,
    total_degrees,
    variable_ring,
    x_ring,
)

__all__ = [
    "MultiIndex",
    "Permutation",
    "Polynomial",
    "RingMismatchError",
    "all_permutations",
    "as_fraction",
    "chart_ring",
    "coordinate_labels",
    "coordinate_names",
    "coordinate_ring",
    "delta_set",
    "format_monomial",
    "format_rational",
    "is_consistent",
    "is_homogeneous",
    "matrix_rank",
    "monomial",
    "parse_multi_index",
    "parse_polynomial",
    "permutation_sign",
    "poly_add",
    "poly_mul",
    "poly_scale",
    "poly_sub",
    "poly_sum",
    "render",
    "render_latex",
    "star",
    "to_rational",
    "total_degrees",
    "variable_ring",
    "x_ring",
]
