from fractions import Fraction
from math import gcd

import pytest
from hypothesis import given, strategies as st

from frobenius.apery import (
    NrTable,
    apery_table,
    binomial_moments,
    compute_nr,
    residue_permute,
    stats_from_nr,
    weighted_sums_from_nr,
)
from frobenius.errors import DomainError
from frobenius.oracle import denumerant, oracle_stats

from strategies import tuples


def test_tables():
    assert compute_nr((5, 9, 11)).values == (0, 11, 22, 18, 9)
    assert compute_nr((2, 3)).values == (0, 3)
    assert compute_nr((7, 8, 9)).values == (0, 8, 9, 17, 18, 26, 27)


@pytest.mark.parametrize(
    "A, expected",
    [((5, 9, 11), (17, 10, 73)), ((5, 16, 19, 22), (33, 17, 209)), ((2, 3), (1, 1, 1))],
)
def test_stats_examples(A, expected):
    b = stats_from_nr(compute_nr(A))
    assert (b.g, b.n, b.s) == expected


def test_modulus_is_first_element():
    assert compute_nr((9, 5, 11)).modulus == 9
    assert apery_table((9, 5, 11)).modulus == 5
    assert stats_from_nr(compute_nr((9, 5, 11))).g == stats_from_nr(apery_table((9, 5, 11))).g


def test_json_round_trip():
    T = compute_nr((7, 8, 9))
    assert T.to_json() == '{"modulus": 7, "values": [0, 8, 9, 17, 18, 26, 27]}'
    assert NrTable.from_json(T.to_json()).values == T.values


@given(tuples(max_value=300))
def test_round_robin_matches_dijkstra(A):
    assert compute_nr(A, "round_robin").values == compute_nr(A, "dijkstra").values


@given(tuples(max_value=60))
def test_table_invariants(A):
    T = compute_nr(A)
    a = T.modulus
    assert T.values[0] == 0
    assert all(v % a == r for r, v in enumerate(T.values))
    assert max(T.values) - a == stats_from_nr(T).g
    for v in T.values[1:]:
        assert denumerant(v, A[1:]) > 0
        assert v < a or denumerant(v - a, A) == 0


@given(tuples(max_value=60), st.integers(0, 3), st.integers(0, 3))
def test_redundant_generator_changes_nothing(A, i, j):
    extra = i * A[0] + j * A[-1] + A[1]
    assert compute_nr(A + (extra,)).values == compute_nr(A).values


@given(tuples(max_size=4, max_value=300))
def test_matches_oracle(A):
    mine = stats_from_nr(compute_nr(A), 4)
    ref = oracle_stats(A, 4)
    assert mine.differences(ref) == []
    assert (mine.g, mine.n, mine.s, mine.s_mu, mine.shat_mu) == (ref.g, ref.n, ref.s, ref.s_mu, ref.shat_mu)


@given(tuples(max_size=4, max_value=40))
def test_weighted_sums_match_oracle(A):
    lams = [Fraction(-1), Fraction(1, 2), Fraction(-2, 3), Fraction(3)]
    mine = stats_from_nr(compute_nr(A), 3, lams)
    assert mine.s_mu_lambda == oracle_stats(A, 3, lams).s_mu_lambda


def test_weighted_sums_reject_trivial_weight():
    with pytest.raises(DomainError):
        weighted_sums_from_nr(compute_nr((3, 5)), 1, 2)


def test_binomial_moments_from_power_sums():
    # gaps of (3, 5): 1, 2, 4, 7
    assert binomial_moments(4, {1: 14, 2: 70}, 2) == {1: 14, 2: 0 + 1 + 6 + 21}


def test_residue_permute_examples():
    T = compute_nr((5, 9, 11))
    P = residue_permute(T, 2)
    assert sorted(P.values) == [0, 9, 11, 18, 22]
    assert P.values == tuple(T.values[(2 * r) % 5] for r in range(5))
    assert residue_permute(T, 1).values == T.values
    P = residue_permute(compute_nr((7, 8, 9)), 3)
    assert P.values[:3] == (0, 17, 27)
    with pytest.raises(DomainError):
        residue_permute(compute_nr((6, 7)), 3)


def test_permutation_keeps_multiset_and_statistics():
    for a in range(2, 31):
        T = compute_nr((a, a + 1, 2 * a + 3)) if gcd(a, 3) else compute_nr((a, a + 1))
        for d in range(1, a):
            if gcd(d, a) == 1:
                P = residue_permute(T, d)
                assert sorted(P.values) == sorted(T.values)
                assert stats_from_nr(P, 2).differences(stats_from_nr(T, 2)) == []
