"""
The four-ary product m4 on the cohomology of P^2.

m4 is evaluated two ways:

* by the tree sum m4 = -sum_T epsilon(T) m_T, where m_T applies iota at the
  leaves, the Čech product at inner vertices, Q on every inner edge and pi at
  the root;
* by closed formulas in terms of the 0/1 function rho, one per position of the
  single H^2 argument.

Only products with exactly one argument in H^2 are computed.
"""

from __future__ import annotations

import logging
from enum import Enum
from typing import Dict, List, Sequence, Tuple

from decabracket.homotopy.cech import (
    CechElement,
    CohomologyClass,
    HInput,
    as_class,
    homotopy_q,
    include,
    multiply,
    project,
)
from decabracket.homotopy.trees import PLANTED_TREES, PlantedTree, Shape
from decabracket.polynomials.multidegree import MultiIndex

logger = logging.getLogger(__name__)


class OutOfScopeError(ValueError):
    """Raised for m4 with two or more arguments in H^2."""


class M4Ordering(str, Enum):
    """Position of the H^2 argument e among the polynomial arguments f, g, h."""

    EFGH = "efgh"
    FEGH = "fegh"
    FGEH = "fgeh"
    FGHE = "fghe"

    @property
    def e_position(self) -> int:
        return self.value.index("e")

    @classmethod
    def parse(cls, word: str) -> "M4Ordering":
        """
        Read an ordering word such as 'fgeh'.

        Raises:
            OutOfScopeError: if the word places more than one H^2 argument
            ValueError: for any other malformed word
        """
        cleaned = word.strip().lower().replace(",", "").replace(" ", "")
        if len(cleaned) == 4 and set(cleaned) <= set("efgh") and cleaned.count("e") >= 2:
            raise OutOfScopeError(
                f"ordering {word!r} puts {cleaned.count('e')} arguments in H^2; "
                "only products with a single H^2 argument are computed"
            )
        for ordering in cls:
            if ordering.value == cleaned:
                return ordering
        raise ValueError(f"unknown ordering {word!r}; expected one of {[o.value for o in cls]}")


# trees that can be nonzero for each position of the H^2 argument
POSSIBLE_TREES = {
    M4Ordering.EFGH: frozenset({"T5"}),
    M4Ordering.FEGH: frozenset({"T1", "T2", "T5"}),
    M4Ordering.FGEH: frozenset({"T1", "T2", "T3"}),
    M4Ordering.FGHE: frozenset({"T3"}),
}


def rho(alpha: MultiIndex, a: MultiIndex, b: MultiIndex, c: MultiIndex) -> int:
    """1 when the chain through trees with leaves a, b, c attached in order survives, else 0."""
    return int(
        alpha[0] + a[0] >= 0
        and alpha[1] + a[1] < 0
        and alpha[1] + a[1] + b[1] >= 0
        and alpha[2] + a[2] + b[2] < 0
        and alpha[2] + a[2] + b[2] + c[2] >= 0
    )


def m4_closed_coefficient(ordering: M4Ordering, alpha: MultiIndex, a: MultiIndex, b: MultiIndex, c: MultiIndex) -> int:
    ordering = M4Ordering(ordering)
    if ordering is M4Ordering.EFGH:
        return -rho(alpha, a, b, c)
    if ordering is M4Ordering.FEGH:
        return -rho(alpha, a, b, c) + rho(alpha, b, a, c) - rho(alpha, b, c, a)
    if ordering is M4Ordering.FGEH:
        return rho(alpha, b, a, c) - rho(alpha, b, c, a) + rho(alpha, c, b, a)
    return rho(alpha, c, b, a)


def m4_closed(ordering: M4Ordering, alpha: MultiIndex, a: MultiIndex, b: MultiIndex, c: MultiIndex) -> CohomologyClass:
    """
    Closed-form m4 with e = x^alpha_{012} at the given position and f, g, h = x^a, x^b, x^c.

    Returns:
        coefficient * x^(alpha + a + b + c) as an H^0 class
    """
    coeff = m4_closed_coefficient(ordering, alpha, a, b, c)
    if not coeff:
        return CohomologyClass(len(alpha) - 1)
    return CohomologyClass.monomial(alpha + a + b + c, coeff)


def _evaluate(shape: Shape, leaves: Sequence[CechElement], root: bool) -> CechElement:
    if isinstance(shape, int):
        return leaves[shape]
    left, right = shape
    product = multiply(_evaluate(left, leaves, False), _evaluate(right, leaves, False))
    return product if root else homotopy_q(product)


def _checked_arguments(args: Sequence[HInput]) -> List[CohomologyClass]:
    if len(args) != 4:
        raise ValueError(f"m4 takes 4 arguments, got {len(args)}")
    classes = [as_class(arg, None) for arg in args]
    n = classes[0].n
    if any(h.n != n for h in classes):
        raise ValueError("m4 arguments live on different projective spaces")
    top = [i for i, h in enumerate(classes) if h.n in h.degrees]
    if len(top) >= 2:
        raise OutOfScopeError(
            f"arguments {top} lie in H^{n}; only products with a single H^{n} argument are computed"
        )
    if not top and not any(h.is_zero() for h in classes):
        raise ValueError(f"m4 needs exactly one argument in H^{n}, got none")
    return classes


def eval_tree(tree: PlantedTree, args: Sequence[HInput]) -> CohomologyClass:
    """
    m_T(e, f, g, h): iota at the leaves, products at inner vertices, Q on inner edges, pi at the root.

    Args:
        tree: One of the planted trees
        args: Four cohomology classes, left to right, exactly one of them in H^2

    Returns:
        The resulting class (always in H^0 for the in-scope degrees)
    """
    classes = _checked_arguments(args)
    leaves = [include(h) for h in classes]
    return project(_evaluate(tree.shape, leaves, True))


def m4_tree(args: Sequence[HInput]) -> CohomologyClass:
    """m4 = -sum_T epsilon(T) m_T over the five planted trees."""
    classes = _checked_arguments(args)
    total = CohomologyClass(classes[0].n)
    for tree in PLANTED_TREES:
        value = eval_tree(tree, classes)
        if not value.is_zero():
            total = total - value.scale(tree.epsilon)
    return total


def ordered_arguments(ordering: M4Ordering, alpha: MultiIndex, a: MultiIndex, b: MultiIndex, c: MultiIndex) -> List[CohomologyClass]:
    """Place e = x^alpha_{012} at the ordering's H^2 slot and x^a, x^b, x^c in the others."""
    ordering = M4Ordering(ordering)
    polynomial_args = iter([a, b, c])
    args = []
    for letter in ordering.value:
        exponent = alpha if letter == "e" else next(polynomial_args)
        args.append(CohomologyClass.monomial(exponent))
    return args


def m4_tree_for(ordering: M4Ordering, alpha: MultiIndex, a: MultiIndex, b: MultiIndex, c: MultiIndex) -> CohomologyClass:
    return m4_tree(ordered_arguments(ordering, alpha, a, b, c))


def surviving_trees(ordering: M4Ordering, alpha: MultiIndex, a: MultiIndex, b: MultiIndex, c: MultiIndex) -> Dict[str, CohomologyClass]:
    """Nonzero m_T values for the given monomial arguments, keyed by tree name."""
    args = ordered_arguments(ordering, alpha, a, b, c)
    values = {tree.name: eval_tree(tree, args) for tree in PLANTED_TREES}
    return {name: value for name, value in values.items() if not value.is_zero()}


def m4_agreement(ordering: M4Ordering, alpha: MultiIndex, a: MultiIndex, b: MultiIndex, c: MultiIndex) -> Tuple[CohomologyClass, CohomologyClass, bool]:
    ordering = M4Ordering(ordering)
    closed = m4_closed(ordering, alpha, a, b, c)
    tree = m4_tree_for(ordering, alpha, a, b, c)
    if closed != tree:
        logger.warning(f"[AINF] {ordering.value} alpha={alpha} a={a} b={b} c={c}: closed {closed} != tree {tree}")
    return closed, tree, closed == tree


__all__ = [
    "M4Ordering",
    "OutOfScopeError",
    "POSSIBLE_TREES",
    "eval_tree",
    "m4_agreement",
    "m4_closed",
    "m4_closed_coefficient",
    "m4_tree",
    "m4_tree_for",
    "ordered_arguments",
    "rho",
    "surviving_trees",
]
