"""
Exact rank and feasibility over QQ.

Sparse systems are assembled as dict-of-dicts rows and handed to sympy's
DomainMatrix (SDM format), whose reduced row echelon form is computed with
exact rational pivoting.
"""

from __future__ import annotations

import logging
from typing import Dict, Hashable, List, Mapping, Sequence

from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from decabracket.polynomials.polynomial import to_rational

logger = logging.getLogger(__name__)

SparseRow = Mapping[Hashable, object]


def _index_columns(rows: Sequence[SparseRow]) -> Dict[Hashable, int]:
    columns: Dict[Hashable, int] = {}
    for row in rows:
        for key in row:
            if key not in columns:
                columns[key] = len(columns)
    return columns


def _to_domain_matrix(rows: Sequence[SparseRow], columns: Dict[Hashable, int]) -> DomainMatrix:
    entries: Dict[int, Dict[int, object]] = {}
    for i, row in enumerate(rows):
        packed = {}
        for key, value in row.items():
            value = to_rational(value)
            if value:
                packed[columns[key]] = value
        if packed:
            entries[i] = packed
    return DomainMatrix(entries, (len(rows), len(columns)), QQ)


def matrix_rank(rows: Sequence[SparseRow]) -> int:
    """
    Exact rank of a sparse matrix.

    Args:
        rows: One mapping per row from column key to rational entry; missing keys are zero

    Returns:
        Rank over QQ
    """
    columns = _index_columns(rows)
    if not rows or not columns:
        return 0
    matrix = _to_domain_matrix(rows, columns)
    if not matrix.rep.nnz():
        return 0
    return matrix.rank()


def is_consistent(rows: Sequence[SparseRow], rhs: Sequence[object]) -> bool:
    """
    Decide whether A v = b has a rational solution.

    A solution exists exactly when appending b as a column does not raise the rank.
    """
    if len(rows) != len(rhs):
        raise ValueError(f"system has {len(rows)} rows but {len(rhs)} right-hand sides")
    rhs_key = object()
    augmented: List[Dict[Hashable, object]] = []
    for row, value in zip(rows, rhs):
        extended = dict(row)
        if to_rational(value):
            extended[rhs_key] = value
        augmented.append(extended)
    rank_a = matrix_rank(rows)
    rank_ab = matrix_rank(augmented)
    logger.debug(f"[LINALG] {len(rows)} rows: rank A = {rank_a}, rank [A|b] = {rank_ab}")
    return rank_a == rank_ab


__all__ = ["SparseRow", "is_consistent", "matrix_rank"]
