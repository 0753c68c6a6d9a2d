"""Pure-Python F_2 elimination kernels.

Rows are Python ints used as packed bit-vectors: bit j of a row is the
entry in column j.  Pivoting is always on the highest set bit, so the
elimination order is deterministic and backend-independent.
"""

from __future__ import annotations

from typing import List, Sequence, Tuple

__all__ = ["f2_rank", "f2_rank_kernel", "BACKEND"]

BACKEND = "pure"


def f2_rank(rows: Sequence[int], n_cols: int) -> int:
    """Rank of the matrix whose rows are the given bit-vectors."""
    pivots: dict[int, int] = {}
    rank = 0
    for row in rows:
        while row:
            lead = row.bit_length() - 1
            piv = pivots.get(lead)
            if piv is None:
                pivots[lead] = row
                rank += 1
                break
            row ^= piv
    return rank


def f2_rank_kernel(rows: Sequence[int], n_rows: int, n_cols: int) -> Tuple[int, List[int]]:
    """Rank and a basis of the right kernel.

    The kernel vectors are bit-vectors over the columns.  Columns are
    processed left to right against a growing pivot table over row
    indices; a column that reduces to zero yields a kernel vector whose
    tracked combination records which columns were mixed in.  The basis
    is triangular (distinct highest bits), hence deterministic.
    """
    cols = [0] * n_cols
    for r, row in enumerate(rows):
        rbit = 1 << r
        while row:
            low = row & -row
            cols[low.bit_length() - 1] |= rbit
            row ^= low
    pivots: dict[int, Tuple[int, int]] = {}
    kernel: List[int] = []
    for j in range(n_cols):
        vec = cols[j]
        track = 1 << j
        while vec:
            lead = vec.bit_length() - 1
            piv = pivots.get(lead)
            if piv is None:
                pivots[lead] = (vec, track)
                break
            vec ^= piv[0]
            track ^= piv[1]
        else:
            kernel.append(track)
    return n_cols - len(kernel), kernel
