"""Wreath series routes, collation, and the determinant identities."""

import random
from fractions import Fraction

import pytest

from supermolien.fixtures import matrix_group_fixture
from supermolien.groups import MatrixGroup, PermGroup, Permutation, WreathElement
from supermolien.linalg import QMatrix, qmatrix_det
from supermolien.molien import GroupAction, label_molien_term, super_molien
from supermolien.series import (
    Caps,
    TrigradedSeries,
    series_add,
    series_inv,
    series_mul,
    series_pow_int,
    series_scale,
    series_sub,
)
from supermolien.superalgebra import AlgebraSignature
from supermolien.wreath_series import (
    CollationSpec,
    check_collation,
    check_superspace,
    check_wreath_routes,
    collated_product_series,
    collated_sum_series,
    superspace_product_series,
    superspace_qbinomial_series,
    superspace_single_n_product,
    verify_block_determinant_lemma,
    verify_m_cycle_identity,
    wreath_hilbert_direct,
    wreath_hilbert_plethysm,
    young_exterior_product,
)

WREATH_CASES = [
    ("s2", "sign-scalar", 2),
    ("s3", "sign-scalar", 3),
    ("s2", "s2-theta", 2),
    ("c3", "trivial-1-1", 3),
]


def _perm_fixture(name):
    if name == "s2":
        return PermGroup.symmetric(2)
    if name == "s3":
        return PermGroup.symmetric(3)
    if name == "c3":
        return PermGroup.cyclic(3)
    raise KeyError(name)


@pytest.mark.parametrize("pname,gname,n", WREATH_CASES)
@pytest.mark.parametrize("flavor", ["invariant", "antiinvariant"])
def test_direct_equals_plethysm(pname, gname, n, flavor):
    P = _perm_fixture(pname)
    G = matrix_group_fixture(gname)
    direct = wreath_hilbert_direct(P, G, n, flavor, 5)
    pleth = wreath_hilbert_plethysm(P, G, n, flavor, 5)
    assert direct == pleth


def test_check_wreath_routes_report_shape():
    rep = check_wreath_routes(PermGroup.symmetric(2), MatrixGroup.trivial(1, 1), 2, "invariant", 4)
    assert rep == {
        "theorem": "1.1",
        "flavor": "invariant",
        "match": True,
        "caps": {"t": 0, "q": 4, "u": 2},
    }


def test_plethysm_route_frozen_value():
    # S_2 wreath of one even and one odd variable: (1+u)(1+qu)/((1-q)(1-q^2))
    caps = Caps(0, 6, 2)
    one = TrigradedSeries.one(caps)
    u = TrigradedSeries.monomial(caps, (0, 0, 1))
    q = TrigradedSeries.monomial(caps, (0, 1, 0))
    qu = TrigradedSeries.monomial(caps, (0, 1, 1))
    q2 = TrigradedSeries.monomial(caps, (0, 2, 0))
    expected = series_mul(
        series_mul(series_add(one, u), series_add(one, qu)),
        series_inv(series_mul(series_sub(one, q), series_sub(one, q2))),
    )
    got = wreath_hilbert_plethysm(PermGroup.symmetric(2), MatrixGroup.trivial(1, 1), 2, "invariant", 6)
    assert got == expected


def test_plethysm_route_antiinvariant_frozen_value():
    # same setup, sign weights: (1+u)(q+u)/((1-q)(1-q^2))
    caps = Caps(0, 6, 2)
    one = TrigradedSeries.one(caps)
    u = TrigradedSeries.monomial(caps, (0, 0, 1))
    q = TrigradedSeries.monomial(caps, (0, 1, 0))
    q2 = TrigradedSeries.monomial(caps, (0, 2, 0))
    expected = series_mul(
        series_mul(series_add(one, u), series_add(q, u)),
        series_inv(series_mul(series_sub(one, q), series_sub(one, q2))),
    )
    got = wreath_hilbert_plethysm(
        PermGroup.symmetric(2), MatrixGroup.trivial(1, 1), 2, "antiinvariant", 6
    )
    assert got == expected


@pytest.mark.parametrize("n", [1, 2, 3])
def test_wreath_matches_diagonal_matrix_embedding(n):
    # the same group realized two ways: wreath labels vs permutation matrices
    G = matrix_group_fixture(f"s{n}-diag")
    wreath = wreath_hilbert_direct(PermGroup.symmetric(n), MatrixGroup.trivial(1, 1), n, "invariant", 5)
    flat = super_molien(GroupAction.from_matrix_group(G), 5)
    assert wreath == flat


@pytest.mark.parametrize("gname", ["trivial-1-1", "sign-scalar", "young-2-1-theta"])
@pytest.mark.parametrize("flavor", ["invariant", "antiinvariant"])
def test_collation_sum_equals_product(gname, flavor):
    G = matrix_group_fixture(gname)
    spec = CollationSpec(group=G, n_max=3, dq=4, du=4, flavor=flavor)
    assert collated_sum_series(spec) == collated_product_series(spec)


def test_check_collation_report_shape():
    spec = CollationSpec(group=MatrixGroup.trivial(1, 0), n_max=2, dq=3, du=0)
    rep = check_collation(spec)
    assert rep == {
        "theorem": "1.2",
        "flavor": "invariant",
        "match": True,
        "caps": {"t": 2, "q": 3, "u": 0},
    }


def _young_21_expected(n_max, du):
    # (1 + t u)^2 / ((1 - t)(1 - t u^2))
    caps = Caps(n_max, 0, du)
    one = TrigradedSeries.one(caps)
    tu = TrigradedSeries.monomial(caps, (1, 0, 1))
    t = TrigradedSeries.monomial(caps, (1, 0, 0))
    tu2 = TrigradedSeries.monomial(caps, (1, 0, 2))
    return series_mul(
        series_pow_int(series_add(one, tu), 2),
        series_inv(series_mul(series_sub(one, t), series_sub(one, tu2))),
    )


def test_young_collation_two_blocks_frozen():
    spec = CollationSpec(matrix_group_fixture("young-2-1-theta"), 3, 0, 9)
    got = collated_product_series(spec)
    assert got == _young_21_expected(3, 9)
    assert got == young_exterior_product(2, 3, 9)


def test_young_collation_depends_only_on_block_count():
    a = collated_product_series(CollationSpec(matrix_group_fixture("young-2-1-theta"), 3, 0, 9))
    b = collated_product_series(CollationSpec(matrix_group_fixture("young-1-2-theta"), 3, 0, 9))
    assert a == b


def test_young_collation_single_block():
    # one block: (1 + t u)/(1 - t)
    spec = CollationSpec(matrix_group_fixture("young-3-theta"), 3, 0, 9)
    caps = Caps(3, 0, 9)
    one = TrigradedSeries.one(caps)
    tu = TrigradedSeries.monomial(caps, (1, 0, 1))
    t = TrigradedSeries.monomial(caps, (1, 0, 0))
    expected = series_mul(series_add(one, tu), series_inv(series_sub(one, t)))
    assert collated_product_series(spec) == expected
    assert collated_product_series(spec) == young_exterior_product(1, 3, 9)


def test_young_collation_three_blocks_closed_form():
    spec = CollationSpec(matrix_group_fixture("young-1-1-1-theta"), 3, 0, 9)
    assert collated_product_series(spec) == young_exterior_product(3, 3, 9)


def test_young_collation_sum_route_agrees():
    # the sum route goes through actual wreath enumerations; t-degree 2 keeps it quick
    spec = CollationSpec(matrix_group_fixture("young-2-1-theta"), 2, 0, 6)
    assert collated_sum_series(spec) == _young_21_expected(2, 6)


def test_collation_spec_validation():
    with pytest.raises(ValueError):
        CollationSpec(MatrixGroup.trivial(1, 0), 2, 2, 2, flavor="bogus")
    with pytest.raises(ValueError):
        CollationSpec(MatrixGroup.trivial(1, 0), -1, 2, 2)


def _random_block(rng, r):
    return QMatrix.from_rows(
        [[Fraction(rng.randint(-3, 3), rng.choice([1, 1, 2])) for _ in range(r)] for _ in range(r)]
    )


def test_block_determinant_lemma_seeded():
    rng = random.Random(42)
    for _ in range(25):
        r = rng.randint(1, 3)
        m = rng.randint(1, 4)
        blocks = [_random_block(rng, r) for _ in range(m)]
        assert verify_block_determinant_lemma(blocks)


def test_block_determinant_lemma_hand_case():
    # m = 2, r = 1: both sides are 1 - ab
    a = QMatrix.from_rows([[Fraction(2)]])
    b = QMatrix.from_rows([[Fraction(3)]])
    assert verify_block_determinant_lemma([a, b])
    big = QMatrix.from_rows(
        [[Fraction(1), Fraction(-2)], [Fraction(-3), Fraction(1)]]
    )
    assert qmatrix_det(big) == Fraction(-5)


def test_block_determinant_lemma_validation():
    with pytest.raises(ValueError):
        verify_block_determinant_lemma([])
    with pytest.raises(ValueError):
        verify_block_determinant_lemma(
            [QMatrix.identity(2), QMatrix.identity(3)]
        )


@pytest.mark.parametrize(
    "gname,m",
    [("sign-scalar", 2), ("sign-scalar", 3), ("s2-theta", 2), ("trivial-1-1", 4)],
)
def test_m_cycle_identity(gname, m):
    assert verify_m_cycle_identity(matrix_group_fixture(gname), m, 5)


def test_m_cycle_sum_frozen_value():
    # S_2 on two anticommuting variables, m = 2: the averaged sum is 1 - u^2,
    # the u -> -u flip of the squared-exponent one-row series 1 + u.
    G = matrix_group_fixture("s2-theta")
    caps = Caps(0, 4, 2)
    sig = AlgebraSignature(G.r0, G.r1, 2)
    cyc = Permutation.from_cycles(2, [(1, 2)])
    total = TrigradedSeries.zero(caps)
    for g1 in G.elements:
        for g2 in G.elements:
            total = series_add(total, label_molien_term(WreathElement(cyc, (g1, g2)), sig, caps))
    lhs = series_scale(total, Fraction(1, 4))
    one = TrigradedSeries.one(caps)
    u2 = TrigradedSeries.monomial(caps, (0, 0, 2))
    assert lhs == series_sub(one, u2)


@pytest.mark.parametrize("n", [1, 2, 3])
@pytest.mark.parametrize("flavor", ["invariant", "antiinvariant"])
def test_superspace_single_n_closed_form(n, flavor):
    direct = wreath_hilbert_direct(
        PermGroup.symmetric(n), MatrixGroup.trivial(1, 1), n, flavor, 6
    )
    assert direct == superspace_single_n_product(n, 6, flavor)


@pytest.mark.parametrize("flavor", ["invariant", "antiinvariant"])
def test_superspace_three_routes(flavor):
    rep = check_superspace(3, 6, flavor)
    assert rep["match"]


def test_superspace_product_equals_qbinomial():
    assert superspace_product_series(4, 5) == superspace_qbinomial_series(4, 5)
    assert superspace_product_series(4, 5, "antiinvariant") == superspace_qbinomial_series(
        4, 5, "antiinvariant"
    )


def test_flavor_validation():
    with pytest.raises(ValueError):
        wreath_hilbert_direct(PermGroup.symmetric(2), MatrixGroup.trivial(1, 0), 2, "nope", 3)
    with pytest.raises(ValueError):
        superspace_product_series(2, 2, "nope")
