"""
Jacobiators, chart restrictions and projective equality for bivectors on P^5.
"""

from decabracket.poisson.multivectors import ChartBivector, PolyBivector, PolyTrivector
from decabracket.poisson.poissonlab import (
    CHARTS,
    AmbientWitness,
    PencilSample,
    PoissonVerdict,
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
    permute_coordinates,
    projective_equal,
    projective_equal_routes,
    random_pencils,
    rank_of_family,
    skew_symmetry_holds,
    support_grading_holds,
    torus_weights,
)

__all__ = [
    "AmbientWitness",
    "CHARTS",
    "ChartBivector",
    "PencilSample",
    "PoissonVerdict",
    "PolyBivector",
    "PolyTrivector",
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
