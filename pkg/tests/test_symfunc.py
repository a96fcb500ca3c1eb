"""Cycle indices, the omega involution, plethysm, h/e identities, composition."""

import itertools
import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from supermolien.groups import (
    PermGroup,
    Permutation,
    perm_group_of_wreath,
    sgn_character,
    trivial_character,
    validate_character,
)
from supermolien.series import Caps, TrigradedSeries, series_inv, series_mul
from supermolien.symfunc import (
    SymFuncPoly,
    cycle_index,
    hn_en,
    omega,
    plethystic_compose,
    plethystic_substitute,
)


def brute_cycle_index(n, signed=False):
    """Independent oracle: enumerate one-line words, read cycle types directly."""
    acc = {}
    for word in itertools.permutations(range(1, n + 1)):
        seen = [False] * n
        lengths = []
        for start in range(1, n + 1):
            if seen[start - 1]:
                continue
            ln, i = 0, start
            while not seen[i - 1]:
                seen[i - 1] = True
                i = word[i - 1]
                ln += 1
            lengths.append(ln)
        lam = tuple(sorted(lengths, reverse=True))
        w = 1
        if signed:
            w = (-1) ** (n - len(lam))
        acc[lam] = acc.get(lam, 0) + w
    return SymFuncPoly({lam: Fraction(c, math.factorial(n)) for lam, c in acc.items() if c})


def geom(caps):
    return series_inv(
        TrigradedSeries(caps, {(0, 0, 0): Fraction(1), (0, 1, 0): Fraction(-1)})
    )


def test_partition_validation():
    with pytest.raises(ValueError):
        SymFuncPoly({(1, 2): Fraction(1)})
    with pytest.raises(ValueError):
        SymFuncPoly({(0,): Fraction(1)})


def test_product_concatenates_partitions():
    f = SymFuncPoly.p(2) * SymFuncPoly.p(3)
    assert f == SymFuncPoly({(3, 2): Fraction(1)})
    assert SymFuncPoly.one() * f == f


def test_cycle_index_s3_frozen():
    z = cycle_index(PermGroup.symmetric(3))
    assert z == SymFuncPoly(
        {(1, 1, 1): Fraction(1, 6), (2, 1): Fraction(1, 2), (3,): Fraction(1, 3)}
    )


def test_cycle_index_s3_sgn_frozen():
    z = cycle_index(PermGroup.symmetric(3), "sgn")
    assert z == SymFuncPoly(
        {(1, 1, 1): Fraction(1, 6), (2, 1): Fraction(-1, 2), (3,): Fraction(1, 3)}
    )


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_cycle_index_matches_brute_enumeration(n):
    assert cycle_index(PermGroup.symmetric(n)) == brute_cycle_index(n)
    assert cycle_index(PermGroup.symmetric(n), "sgn") == brute_cycle_index(n, signed=True)


def test_cycle_index_young_subgroup():
    # S_(2,1): identity and one transposition
    z = cycle_index(PermGroup.young([2, 1]))
    assert z == SymFuncPoly({(1, 1, 1): Fraction(1, 2), (2, 1): Fraction(1, 2)})


def test_cycle_index_with_explicit_character_matches_sgn():
    P = PermGroup.symmetric(3)
    chi = validate_character([Fraction(1) if _is_even(p) else Fraction(-1) for p in P.elements], P)
    assert cycle_index(P, "character", chi) == cycle_index(P, "sgn")


def _is_even(p: Permutation) -> bool:
    from supermolien.groups import perm_sign

    return perm_sign(p) == 1


def test_character_validation_rejects_non_homomorphism():
    P = PermGroup.symmetric(3)
    values = [Fraction(1)] * P.order
    values[2] = Fraction(-1)  # corrupt a single value
    corrupted = False
    try:
        validate_character(values, P)
    except ValueError:
        corrupted = True
    assert corrupted


def test_character_validation_rejects_zero_and_bad_identity():
    P = PermGroup.symmetric(2)
    with pytest.raises(ValueError):
        validate_character([Fraction(1), Fraction(0)], P)
    with pytest.raises(ValueError):
        validate_character([Fraction(-1), Fraction(1)], P)


def test_sgn_character_is_valid():
    for P in [PermGroup.symmetric(2), PermGroup.symmetric(3), PermGroup.young([2, 1])]:
        chi = validate_character(sgn_character(P).values, P)
        assert chi.values[P.identity_index] == 1


def test_omega_swaps_plain_and_sgn_cycle_index():
    for P in [
        PermGroup.trivial(1),
        PermGroup.symmetric(2),
        PermGroup.symmetric(3),
        PermGroup.symmetric(4),
        PermGroup.symmetric(5),
        PermGroup.cyclic(3),
        PermGroup.young([2, 1]),
        PermGroup.young([2, 2]),
    ]:
        assert omega(cycle_index(P)) == cycle_index(P, "sgn")
        assert omega(cycle_index(P, "sgn")) == cycle_index(P)


def test_omega_is_an_involution_and_ring_map():
    f = SymFuncPoly({(2, 1): Fraction(3), (4,): Fraction(-1, 2)})
    g = SymFuncPoly({(1, 1): Fraction(1), (3,): Fraction(2)})
    assert omega(omega(f)) == f
    assert omega(f * g) == omega(f) * omega(g)


def test_h_times_e_alternating_sum_vanishes():
    # sum_{k=0}^{n} (-1)^k e_k h_{n-k} == 0 for n >= 1
    for n in range(1, 6):
        total = SymFuncPoly.zero()
        for k in range(n + 1):
            term = hn_en(k, "e") * hn_en(n - k, "h")
            total = total + term.scale((-1) ** k)
        assert total.is_zero(), f"n={n}: {total!r}"


def test_hn_en_small_values():
    assert hn_en(0, "h") == SymFuncPoly.one()
    assert hn_en(1, "e") == SymFuncPoly.p(1)
    assert hn_en(2, "h") == SymFuncPoly({(1, 1): Fraction(1, 2), (2,): Fraction(1, 2)})
    assert hn_en(2, "e") == SymFuncPoly({(1, 1): Fraction(1, 2), (2,): Fraction(-1, 2)})


def test_substitute_h2_counts_two_part_partitions():
    # h_2[1/(1-q)] = 1/((1-q)(1-q^2)): q^k counts unordered pairs a <= b, a+b=k
    caps = Caps(0, 8, 0)
    s = plethystic_substitute(hn_en(2, "h"), geom(caps))
    for k in range(9):
        count = sum(1 for a in range(k + 1) if 2 * a <= k)  # a <= b = k - a
        assert s.coefficient((0, k, 0)) == count


def test_substitute_e2_counts_distinct_pairs():
    caps = Caps(0, 8, 0)
    s = plethystic_substitute(hn_en(2, "e"), geom(caps))
    for k in range(9):
        count = sum(1 for a in range(k + 1) if 2 * a < k)  # a < b = k - a
        assert s.coefficient((0, k, 0)) == count


def test_substitute_scales_all_three_exponents():
    caps = Caps(4, 4, 4)
    s = TrigradedSeries(caps, {(1, 1, 1): Fraction(1)})
    out = plethystic_substitute(SymFuncPoly.p(3), s)
    assert out == TrigradedSeries(caps, {(3, 3, 3): Fraction(1)})


def test_compose_on_power_sums():
    # p_r[g] multiplies each part by r
    g = SymFuncPoly({(2, 1): Fraction(5)})
    assert plethystic_compose(SymFuncPoly.p(3), g) == SymFuncPoly({(6, 3): Fraction(5)})
    assert plethystic_compose(SymFuncPoly.p(1), g) == g
    assert plethystic_compose(g, SymFuncPoly.p(1)) == g


symfunc_st = st.dictionaries(
    st.lists(st.integers(1, 3), min_size=0, max_size=2).map(lambda l: tuple(sorted(l, reverse=True))),
    st.fractions(min_value=-3, max_value=3, max_denominator=4),
    max_size=3,
).map(SymFuncPoly)


@given(symfunc_st, symfunc_st, symfunc_st)
@settings(max_examples=30)
def test_compose_is_associative(f, g, h):
    assert plethystic_compose(plethystic_compose(f, g), h) == plethystic_compose(
        f, plethystic_compose(g, h)
    )


@given(symfunc_st, symfunc_st)
@settings(max_examples=30)
def test_substitute_respects_composition(f, g):
    caps = Caps(2, 4, 2)
    s = TrigradedSeries(caps, {(0, 1, 0): Fraction(1), (1, 0, 1): Fraction(1, 2)})
    lhs = plethystic_substitute(plethystic_compose(f, g), s)
    rhs = plethystic_substitute(f, plethystic_substitute(g, s))
    assert lhs == rhs


def test_polya_composition_rule():
    # cycle index of P[G] on points = Z_P composed with Z_G
    cases = [
        (PermGroup.symmetric(2), PermGroup.symmetric(2), 2),
        (PermGroup.symmetric(2), PermGroup.symmetric(3), 2),
        (PermGroup.symmetric(3), PermGroup.symmetric(2), 3),
    ]
    for P, G, n in cases:
        W = perm_group_of_wreath(P, G, n)
        assert cycle_index(W) == plethystic_compose(cycle_index(P), cycle_index(G))


def test_symfunc_json_round_trip():
    f = SymFuncPoly({(3, 1): Fraction(1, 6), (2,): Fraction(-2)})
    data = f.to_json_dict()
    lams = [tuple(e["lambda"]) for e in data["terms"]]
    assert lams == [(3, 1), (2,)]  # degree-major descending order
    assert SymFuncPoly.from_json_dict(data) == f
