"""Linear algebra over GF(2) with rows packed into Python integers.

Bit ``j`` of a row integer is the coefficient of column ``j``.  Python's
arbitrary-width ints make XOR of long rows a single C-level operation, which
is all Gaussian elimination over GF(2) needs.
"""
from __future__ import annotations

from typing import Iterable, Sequence


def rank(rows: Iterable[int]) -> int:
    """Rank of the GF(2) matrix whose rows are the given bitmasks.

    Pivots are chosen on the highest set bit, so the reduction is fully
    deterministic for a given row order.
    """
    pivots: dict[int, int] = {}
    for row in rows:
        while row:
            top = row.bit_length() - 1
            pivot = pivots.get(top)
            if pivot is None:
                pivots[top] = row
                break
            row ^= pivot
    return len(pivots)


def matrix_to_rows(matrix: Sequence[Sequence[int]]) -> list[int]:
    """Pack a list-of-lists 0/1 matrix into row bitmasks."""
    out = []
    for r in matrix:
        bits = 0
        for j, v in enumerate(r):
            if v & 1:
                bits |= 1 << j
        out.append(bits)
    return out


def matmul(a: Sequence[Sequence[int]], b: Sequence[Sequence[int]], inner: int | None = None,
           cols: int | None = None) -> list[list[int]]:
    """Product ``a @ b`` over GF(2) for list-of-lists matrices.

    ``inner`` and ``cols`` pin the shapes when a side has no rows, e.g. a
    map out of or into the zero space.
    """
    if inner is None:
        inner = len(b)
    if a and len(a[0]) != inner:
        raise ValueError(f"shape mismatch: {len(a[0])} columns vs inner dimension {inner}")
    if len(b) != inner:
        raise ValueError(f"shape mismatch: {len(b)} rows vs inner dimension {inner}")
    ncols = cols if cols is not None else (len(b[0]) if b else 0)
    out = []
    for row in a:
        acc = [0] * ncols
        for t, v in enumerate(row):
            if v & 1:
                brow = b[t]
                for j in range(ncols):
                    acc[j] ^= brow[j] & 1
        out.append(acc)
    return out


def matrix_rank(matrix: Sequence[Sequence[int]]) -> int:
    return rank(matrix_to_rows(matrix))
