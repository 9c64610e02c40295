from fractions import Fraction
from math import comb, factorial

import pytest
from hypothesis import given, strategies as st

from frobenius.numeric import bernoulli, falling_factorial, power_sum, stirling1, stirling2


def test_bernoulli_small_values():
    assert bernoulli(0) == 1
    assert bernoulli(1) == Fraction(-1, 2)
    assert bernoulli(2) == Fraction(1, 6)
    assert bernoulli(4) == Fraction(-1, 30)
    assert bernoulli(12) == Fraction(-691, 2730)


def test_bernoulli_generates_t_over_one_minus_exp():
    coeffs = [-bernoulli(n) / factorial(n) for n in range(7)]
    assert coeffs[:5] == [-1, Fraction(1, 2), Fraction(-1, 12), 0, Fraction(1, 720)]


@given(st.integers(1, 40))
def test_bernoulli_odd_indices_vanish(m):
    assert bernoulli(2 * m + 1) == 0


@given(st.integers(1, 70))
def test_bernoulli_recurrence(m):
    assert sum(comb(m + 1, k) * bernoulli(k) for k in range(m + 1)) == 0


def test_bernoulli_rejects_negative():
    with pytest.raises(ValueError):
        bernoulli(-1)


def test_stirling_examples():
    assert stirling2(2, 1) == 1
    assert stirling2(2, 2) == 1
    assert stirling2(3, 2) == 3
    assert stirling2(5, 7) == 0
    assert stirling1(3, 1) == 2 and stirling1(3, 2) == -3


def test_falling_factorial_examples():
    assert falling_factorial(5, 0) == 1
    assert falling_factorial(5, 2) == 20
    assert falling_factorial(3, 4) == 0


def test_power_to_falling_factorial_exhaustive():
    for n in range(21):
        for p in range(21):
            assert sum(stirling2(p, k) * falling_factorial(n, k) for k in range(p + 1)) == n**p


@given(st.integers(-30, 30), st.integers(0, 25))
def test_falling_factorial_from_first_kind(n, p):
    assert sum(stirling1(p, k) * n**k for k in range(p + 1)) == falling_factorial(n, p)


@given(st.integers(0, 80), st.integers(0, 8))
def test_power_sum_matches_loop(upto, p):
    assert power_sum(upto, p) == sum(r**p for r in range(1, upto + 1))


def test_indices_beyond_memo_limit():
    assert stirling2(70, 1) == 1
    assert stirling2(70, 70) == 1
    assert bernoulli(80) == -sum(comb(81, k) * bernoulli(k) for k in range(80)) / 81
