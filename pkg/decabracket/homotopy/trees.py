"""
Planted binary trees with four leaves.

A shape is a nested pair of leaf positions, e.g. (((0, 1), 2), 3). The five
trees are kept in a fixed order T1..T5 together with the sign each carries in
the four-ary product.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Sequence, Tuple, Union

Shape = Union[int, Tuple["Shape", "Shape"]]


@dataclass(frozen=True)
class PlantedTree:
    name: str
    shape: Shape
    # sign in m4 = -sum_T epsilon(T) m_T
    epsilon: int

    @property
    def leaves(self) -> Tuple[int, ...]:
        return tuple(_leaves(self.shape))

    def inner_vertices(self) -> int:
        return len(self.leaves) - 1

    def __str__(self) -> str:
        return f"{self.name}={render_shape(self.shape)}"


def _leaves(shape: Shape) -> List[int]:
    if isinstance(shape, int):
        return [shape]
    left, right = shape
    return _leaves(left) + _leaves(right)


def render_shape(shape: Shape, labels: Sequence[str] = "efgh") -> str:
    if isinstance(shape, int):
        return labels[shape]
    left, right = shape
    return f"({render_shape(left, labels)}{render_shape(right, labels)})"


def enumerate_shapes(leaves: Sequence[int]) -> List[Shape]:
    """All full bracketings of the leaves, kept in left-to-right order."""
    leaves = tuple(leaves)
    if not leaves:
        raise ValueError("a tree needs at least one leaf")
    if len(leaves) == 1:
        return [leaves[0]]
    shapes: List[Shape] = []
    for split in range(1, len(leaves)):
        for left in enumerate_shapes(leaves[:split]):
            for right in enumerate_shapes(leaves[split:]):
                shapes.append((left, right))
    return shapes


# epsilon(T4) is not pinned down by the one-H^2 products: T4 always vanishes there
PLANTED_TREES: Tuple[PlantedTree, ...] = (
    PlantedTree("T1", ((0, (1, 2)), 3), -1),
    PlantedTree("T2", (0, ((1, 2), 3)), 1),
    PlantedTree("T3", (0, (1, (2, 3))), -1),
    PlantedTree("T4", ((0, 1), (2, 3)), 1),
    PlantedTree("T5", (((0, 1), 2), 3), 1),
)


def tree_by_name(name: str) -> PlantedTree:
    for tree in PLANTED_TREES:
        if tree.name == name.upper():
            return tree
    raise ValueError(f"unknown tree {name!r}; expected one of {[t.name for t in PLANTED_TREES]}")


__all__ = ["PLANTED_TREES", "PlantedTree", "Shape", "enumerate_shapes", "render_shape", "tree_by_name"]
