"""Gaussian elimination over an exact field.

Entries only need ``+ - * /`` and a truth value that is false exactly for zero,
which covers ``Fraction`` and ``CyclotomicNumber``.
"""
from __future__ import annotations

from typing import Sequence

__all__ = ["SingularMatrixError", "rank", "inverse", "solve"]


class SingularMatrixError(ArithmeticError):
    pass


def _echelon(rows: list[list]) -> tuple[list[list], list[int]]:
    rows = [r[:] for r in rows]
    pivots = []
    r = 0
    ncols = len(rows[0]) if rows else 0
    for c in range(ncols):
        p = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        pv = rows[r][c]
        for i in range(r + 1, len(rows)):
            if rows[i][c]:
                f = rows[i][c] / pv
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows, pivots


def rank(matrix: Sequence[Sequence]) -> int:
    if not matrix:
        return 0
    return len(_echelon([list(r) for r in matrix])[1])


def inverse(matrix: Sequence[Sequence], one, zero) -> list[list]:
    """Inverse of a square matrix; ``one`` and ``zero`` are the field's units."""
    n = len(matrix)
    aug = [list(row) + [one if i == j else zero for j in range(n)] for i, row in enumerate(matrix)]
    for c in range(n):
        p = next((r for r in range(c, n) if aug[r][c]), None)
        if p is None:
            raise SingularMatrixError(f"matrix is singular (column {c})")
        aug[c], aug[p] = aug[p], aug[c]
        inv_pv = one / aug[c][c]
        aug[c] = [x * inv_pv for x in aug[c]]
        for r in range(n):
            if r != c and aug[r][c]:
                f = aug[r][c]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[c])]
    return [row[n:] for row in aug]


def solve(matrix: Sequence[Sequence], rhs: Sequence, one, zero) -> list:
    inv = inverse(matrix, one, zero)
    out = []
    for row in inv:
        acc = zero
        for a, b in zip(row, rhs):
            acc = acc + a * b
        out.append(acc)
    return out
