"""Exact matrices: Bareiss det/rank against a Laplace-expansion oracle,
char expansion det(I - zM) against pointwise determinant evaluation."""

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from supermolien.errors import NotSquare
from supermolien.linalg import (
    EchelonSelector,
    QMatrix,
    assemble_blocks,
    charpoly_det,
    matrix_rank,
    qmatrix_det,
    select_independent,
)
from supermolien.series import UniPoly


def laplace_det(rows):
    """Independent determinant oracle: cofactor expansion along row 0."""
    n = len(rows)
    if n == 0:
        return Fraction(1)
    if n == 1:
        return Fraction(rows[0][0])
    total = Fraction(0)
    for j, x in enumerate(rows[0]):
        if x == 0:
            continue
        minor = [r[:j] + r[j + 1 :] for r in rows[1:]]
        total += (-1) ** j * Fraction(x) * laplace_det(minor)
    return total


def minor_rank(rows):
    """Independent rank oracle: largest k with a nonzero k x k minor."""
    import itertools

    nr, nc = len(rows), len(rows[0]) if rows else 0
    for k in range(min(nr, nc), 0, -1):
        for rsel in itertools.combinations(range(nr), k):
            for csel in itertools.combinations(range(nc), k):
                sub = [[rows[i][j] for j in csel] for i in rsel]
                if laplace_det(sub) != 0:
                    return k
    return 0


def random_rational_rows(rng, nr, nc, den=4):
    return [
        [Fraction(rng.randint(-5, 5), rng.randint(1, den)) for _ in range(nc)]
        for _ in range(nr)
    ]


def test_matrix_construction_and_access():
    m = QMatrix.from_rows([[1, Fraction(1, 2)], [0, -3]])
    assert m.get(0, 1) == Fraction(1, 2)
    assert m.row(1) == (0, -3)
    assert m == QMatrix(2, 2, [1, Fraction(1, 2), 0, -3])
    assert hash(m) == hash(QMatrix(2, 2, [1, Fraction(1, 2), 0, -3]))


def test_matrix_multiplication():
    a = QMatrix.from_rows([[1, 2], [3, 4]])
    b = QMatrix.from_rows([[0, 1], [1, 0]])
    assert a * b == QMatrix.from_rows([[2, 1], [4, 3]])
    assert QMatrix.identity(2) * a == a


def test_det_hand_values():
    assert qmatrix_det(QMatrix.from_rows([[2]])) == 2
    assert qmatrix_det(QMatrix.from_rows([[1, 2], [3, 4]])) == -2
    assert qmatrix_det(QMatrix.identity(3)) == 1
    assert qmatrix_det(QMatrix.zeros(2, 2)) == 0
    assert qmatrix_det(QMatrix(0, 0, [])) == 1  # empty matrix, needed for r=0 parts
    with pytest.raises(NotSquare):
        qmatrix_det(QMatrix.zeros(2, 3))


def test_det_against_laplace_oracle_seeded():
    rng = random.Random(1712)
    for _ in range(40):
        n = rng.randint(1, 4)
        rows = random_rational_rows(rng, n, n)
        assert qmatrix_det(QMatrix.from_rows(rows)) == laplace_det(rows)


def test_det_multiplicative_seeded():
    rng = random.Random(9)
    for _ in range(20):
        n = rng.randint(1, 4)
        a = QMatrix.from_rows(random_rational_rows(rng, n, n))
        b = QMatrix.from_rows(random_rational_rows(rng, n, n))
        assert qmatrix_det(a * b) == qmatrix_det(a) * qmatrix_det(b)


def test_rank_hand_values():
    assert matrix_rank(QMatrix.zeros(3, 5)) == 0
    assert matrix_rank(QMatrix.identity(4)) == 4
    assert matrix_rank(QMatrix.from_rows([[1, 2, 3], [2, 4, 6]])) == 1
    assert matrix_rank(QMatrix.from_rows([[0, 1], [0, 0], [0, 7]])) == 1


def test_rank_against_minor_oracle_seeded():
    rng = random.Random(77)
    for _ in range(30):
        nr, nc = rng.randint(1, 4), rng.randint(1, 4)
        rows = random_rational_rows(rng, nr, nc)
        if rng.random() < 0.5 and nr > 1:  # plant a dependent row
            i, j = rng.randrange(nr), rng.randrange(nr)
            if i != j:
                rows[i] = [Fraction(2) * x for x in rows[j]]
        assert matrix_rank(QMatrix.from_rows(rows)) == minor_rank(rows)


def test_charpoly_det_hand_values():
    # det(I - z*[[a]]) = 1 - a z
    assert charpoly_det(QMatrix.from_rows([[Fraction(3, 2)]])) == UniPoly([1, Fraction(-3, 2)])
    # diagonal: product of (1 - d_i z)
    d = charpoly_det(QMatrix.from_rows([[2, 0], [0, 3]]))
    assert d == UniPoly([1, -5, 6])
    # 0x0 matrix contributes the empty product
    assert charpoly_det(QMatrix(0, 0, [])) == UniPoly([1])
    # nilpotent
    assert charpoly_det(QMatrix.from_rows([[0, 1], [0, 0]])) == UniPoly([1])


def test_charpoly_det_matches_pointwise_dets_seeded():
    # det(I - z0*M) computed by elimination at n+1 sample points pins the
    # degree-<=n polynomial; the char expansion must agree at every point.
    rng = random.Random(4242)
    points = [Fraction(0), Fraction(1), Fraction(-1), Fraction(1, 2), Fraction(2), Fraction(-3, 5)]
    for _ in range(25):
        n = rng.randint(1, 5)
        m = QMatrix.from_rows(random_rational_rows(rng, n, n))
        p = charpoly_det(m)
        assert p.degree() <= n
        for z0 in points:
            direct = qmatrix_det(QMatrix.identity(n) - m.scale(z0))
            assert p(z0) == direct


def test_assemble_blocks_layout():
    a = QMatrix.from_rows([[1, 2], [3, 4]])
    b = QMatrix.from_rows([[5, 6], [7, 8]])
    m = assemble_blocks(2, 2, {(0, 1): a, (1, 0): b})
    assert m.rows() == [
        (0, 0, 1, 2),
        (0, 0, 3, 4),
        (5, 6, 0, 0),
        (7, 8, 0, 0),
    ]


def test_permutation_image_detection():
    m = QMatrix.from_rows([[0, 1, 0], [0, 0, 1], [1, 0, 0]])
    # column j has its 1 in row images[j]-1: e_1 -> e_3, e_2 -> e_1, e_3 -> e_2
    assert m.as_permutation_images() == [3, 1, 2]
    assert QMatrix.from_rows([[1, 1], [0, 1]]).as_permutation_images() is None
    assert QMatrix.from_rows([[Fraction(1, 2)]]).as_permutation_images() is None


def test_echelon_selector_greedy_order():
    sel = EchelonSelector(3)
    assert sel.offer([1, 0, 0])
    assert not sel.offer([2, 0, 0])
    assert sel.offer([1, 1, 0])
    assert not sel.offer([0, 5, 0])
    assert sel.offer([0, 0, Fraction(1, 3)])
    assert sel.rank == 3


def test_select_independent_matches_rank_seeded():
    rng = random.Random(31)
    for _ in range(25):
        nr, nc = rng.randint(1, 5), rng.randint(1, 4)
        rows = random_rational_rows(rng, nr, nc, den=2)
        chosen = select_independent(rows, nc)
        assert len(chosen) == matrix_rank(QMatrix.from_rows(rows))
        # chosen rows really are independent
        assert matrix_rank(QMatrix.from_rows([rows[i] for i in chosen])) == len(chosen)


@given(st.integers(1, 4), st.integers(0, 100))
@settings(max_examples=30)
def test_rank_of_outer_products_is_at_most_one(n, seed):
    rng = random.Random(seed)
    u = [Fraction(rng.randint(-3, 3)) for _ in range(n)]
    v = [Fraction(rng.randint(-3, 3)) for _ in range(n)]
    rows = [[a * b for b in v] for a in u]
    expected = 1 if any(u) and any(v) else 0
    assert matrix_rank(QMatrix.from_rows(rows)) == expected
