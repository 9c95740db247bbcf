from fractions import Fraction
from itertools import combinations

from richlines import linalg
from richlines.rng import stream


def minor_rank(rows):
    """Brute-force rank via nonzero determinant minors."""

    def det(matrix):
        if len(matrix) == 1:
            return matrix[0][0]
        total = Fraction(0)
        for col in range(len(matrix)):
            sub = [r[:col] + r[col + 1 :] for r in matrix[1:]]
            sign = -1 if col % 2 else 1
            total += sign * matrix[0][col] * det(sub)
        return total

    if not rows or not rows[0]:
        return 0
    best = 0
    ncols = len(rows[0])
    for size in range(1, min(len(rows), ncols) + 1):
        for row_idx in combinations(range(len(rows)), size):
            for col_idx in combinations(range(ncols), size):
                minor = [[rows[i][j] for j in col_idx] for i in row_idx]
                if det(minor) != 0:
                    best = size
                    break
            else:
                continue
            break
    return best


def test_rank_matches_minor_oracle_on_small_matrices():
    rng = stream(77)
    for _ in range(120):
        nrows = rng.next_range(1, 4)
        ncols = rng.next_range(1, 4)
        rows = [
            [Fraction(rng.next_range(-2, 2)) for _ in range(ncols)]
            for _ in range(nrows)
        ]
        assert linalg.rank(rows) == minor_rank(rows)


def test_nullspace_vectors_are_in_the_kernel():
    rng = stream(78)
    for _ in range(60):
        nrows = rng.next_range(1, 4)
        ncols = rng.next_range(2, 5)
        rows = [
            [Fraction(rng.next_range(-3, 3)) for _ in range(ncols)]
            for _ in range(nrows)
        ]
        basis = linalg.nullspace(rows, ncols)
        assert len(basis) == ncols - linalg.rank(rows)
        for vec in basis:
            for row in rows:
                assert sum(a * b for a, b in zip(row, vec)) == 0


def test_nullspace_representative_is_normalized_and_deterministic():
    rows = [[Fraction(1), Fraction(2), Fraction(3)]]
    rep = linalg.nullspace_representative(rows, 3)
    assert rep is not None
    lead = next(v for v in rep if v != 0)
    assert lead == 1
    assert rep == linalg.nullspace_representative(rows, 3)


def test_full_rank_matrix_has_trivial_nullspace():
    rows = [
        [Fraction(1), Fraction(0)],
        [Fraction(0), Fraction(1)],
    ]
    assert linalg.nullspace_representative(rows, 2) is None
    assert linalg.rank(rows) == 2


def test_rref_identity_pivots():
    rows = [
        [Fraction(2), Fraction(4)],
        [Fraction(1), Fraction(3)],
    ]
    reduced, pivots = linalg.rref(rows)
    assert pivots == [0, 1]
    assert reduced == [
        [Fraction(1), Fraction(0)],
        [Fraction(0), Fraction(1)],
    ]


def test_affine_rank():
    pts = [(0, 0, 0), (1, 0, 0), (2, 0, 0), (0, 1, 0)]
    rows = [tuple(Fraction(c) for c in p) for p in pts]
    assert linalg.affine_rank(rows) == 2
    assert linalg.affine_rank(rows[:1]) == 0
