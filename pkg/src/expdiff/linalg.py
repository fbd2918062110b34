"""Exact Gaussian elimination over any field whose elements support
+, -, *, / and truthiness (Fraction and RationalFunction both do)."""

from __future__ import annotations

from typing import Sequence


def _clone(mat):
    return [list(row) for row in mat]


def rref(mat):
    """Reduced row echelon form; returns (rows, pivot column list)."""
    rows = _clone(mat)
    if not rows:
        return rows, []
    ncols = len(rows[0])
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = None
        for i in range(r, len(rows)):
            if rows[i][c]:
                pivot = i
                break
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        pv = rows[r][c]
        rows[r] = [x / pv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows, pivots


def rank(mat) -> int:
    return len(rref(mat)[1])


def nullspace(mat, zero, one):
    """Canonical basis of the right nullspace: one vector per free column."""
    if not mat:
        return []
    ncols = len(mat[0])
    rows, pivots = rref(mat)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        vec = [zero] * ncols
        vec[fc] = one
        for r, pc in enumerate(pivots):
            vec[pc] = -rows[r][fc]
        basis.append(vec)
    return basis


def solve_affine(mat, rhs, zero, one):
    """All solutions of A v = b: (particular | None, nullspace basis).

    The particular solution sets every free variable to zero.
    """
    if not mat:
        return [], []
    ncols = len(mat[0])
    aug = [list(row) + [b] for row, b in zip(mat, rhs)]
    rows, pivots = rref(aug)
    # a pivot in the last column means inconsistency
    if ncols in pivots:
        return None, nullspace(mat, zero, one)
    particular = [zero] * ncols
    for r, pc in enumerate(pivots):
        particular[pc] = rows[r][ncols]
    return particular, nullspace(mat, zero, one)


def matvec(mat, vec, zero):
    out = []
    for row in mat:
        acc = zero
        for a, b in zip(row, vec):
            acc = acc + a * b
        out.append(acc)
    return out
