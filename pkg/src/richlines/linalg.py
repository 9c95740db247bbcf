"""Exact Gaussian elimination over the rationals.

Matrices are lists of rows of Fractions.  Everything here is small and
deterministic: pivots are chosen as the first nonzero entry in column
order, never by magnitude, so repeated runs produce identical output.
"""

from __future__ import annotations

from fractions import Fraction

Row = list[Fraction]


def rref(rows: list[Row]) -> tuple[list[Row], list[int]]:
    """Reduced row echelon form and the list of pivot columns."""
    m = [list(r) for r in rows]
    if not m:
        return [], []
    ncols = len(m[0])
    pivots: list[int] = []
    pr = 0
    for pc in range(ncols):
        pivot_row = None
        for i in range(pr, len(m)):
            if m[i][pc] != 0:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        m[pr], m[pivot_row] = m[pivot_row], m[pr]
        inv = Fraction(1) / m[pr][pc]
        m[pr] = [v * inv for v in m[pr]]
        for i in range(len(m)):
            if i != pr and m[i][pc] != 0:
                factor = m[i][pc]
                m[i] = [a - factor * b for a, b in zip(m[i], m[pr])]
        pivots.append(pc)
        pr += 1
        if pr == len(m):
            break
    return m, pivots


def rank(rows: list[Row]) -> int:
    if not rows:
        return 0
    return len(rref(rows)[1])


def nullspace(rows: list[Row], ncols: int) -> list[Row]:
    """Basis of the right nullspace, one vector per free column.

    Basis vectors are ordered by their free column; vector j has entry 1 in
    its free column and the negated reduced-echelon entries in the pivot
    columns, which makes the basis deterministic.
    """
    reduced, pivots = rref(rows)
    pivot_set = set(pivots)
    free_cols = [c for c in range(ncols) if c not in pivot_set]
    basis: list[Row] = []
    for fc in free_cols:
        vec = [Fraction(0)] * ncols
        vec[fc] = Fraction(1)
        for r, pc in enumerate(pivots):
            vec[pc] = -reduced[r][fc]
        basis.append(vec)
    return basis


def nullspace_representative(rows: list[Row], ncols: int) -> Row | None:
    """Deterministic nullspace vector: smallest free column, leading entry 1.

    Returns None when the nullspace is trivial.
    """
    basis = nullspace(rows, ncols)
    if not basis:
        return None
    vec = basis[0]
    lead = next(v for v in vec if v != 0)
    return [v / lead for v in vec]


def affine_rank(points: list[tuple]) -> int:
    """Rank of the difference vectors from the first point."""
    if len(points) <= 1:
        return 0
    p0 = points[0]
    rows = [[Fraction(a) - Fraction(b) for a, b in zip(p, p0)] for p in points[1:]]
    return rank(rows)
