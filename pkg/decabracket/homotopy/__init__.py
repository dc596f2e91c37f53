"""
Čech homotopy data on P^n and the four-ary product m4 on its cohomology.
"""

from decabracket.homotopy.ainf import (
    M4Ordering,
    POSSIBLE_TREES,
    OutOfScopeError,
    eval_tree,
    m4_agreement,
    m4_closed,
    m4_closed_coefficient,
    m4_tree,
    m4_tree_for,
    ordered_arguments,
    rho,
    surviving_trees,
)
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
from decabracket.homotopy.trees import PLANTED_TREES, PlantedTree, enumerate_shapes, tree_by_name

__all__ = [
    "BOTTOM",
    "CechBasisElement",
    "CechElement",
    "CohomologyClass",
    "M4Ordering",
    "MixedDegreeError",
    "OutOfScopeError",
    "PLANTED_TREES",
    "POSSIBLE_TREES",
    "PlantedTree",
    "basis_elements",
    "differential",
    "enumerate_shapes",
    "eval_tree",
    "homotopy_q",
    "include",
    "k_of",
    "m4_agreement",
    "m4_closed",
    "m4_closed_coefficient",
    "m4_tree",
    "m4_tree_for",
    "multiply",
    "ordered_arguments",
    "project",
    "rho",
    "surviving_trees",
    "tree_by_name",
]
