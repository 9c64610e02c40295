from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from frobenius.errors import InvalidTuple
from frobenius.stats import StatBundle, format_number, make_tuple, parse_number, parse_tuple


@pytest.mark.parametrize("bad", [(4, 6), (1, 3), (5,), (3, 5.0), (0, 3), (True, 3)])
def test_make_tuple_rejects(bad):
    with pytest.raises(InvalidTuple):
        make_tuple(bad)


def test_parse_tuple():
    assert parse_tuple("5,16,19,22") == (5, 16, 19, 22)
    assert parse_tuple(" 2, 3 ") == (2, 3)
    with pytest.raises(InvalidTuple):
        parse_tuple("2,x")


def test_number_formatting():
    assert format_number(Fraction(3, 1)) == 3
    assert format_number(Fraction(-3, 4)) == "-3/4"
    assert parse_number("-3/4") == Fraction(-3, 4)
    assert parse_number(7) == 7


rationals = st.fractions(max_denominator=1000)


@given(
    st.integers(-5, 10**6),
    st.dictionaries(st.integers(1, 5), st.integers(0, 10**12), max_size=4),
    st.dictionaries(rationals.filter(lambda x: x not in (0, 1)), st.dictionaries(st.integers(1, 4), rationals), max_size=3),
)
def test_bundle_json_round_trip(g, s_mu, weighted):
    b = StatBundle((3, 5), g, 4, 14, s_mu, dict(s_mu), weighted, engine="nr")
    back = StatBundle.from_json(b.to_json())
    assert back == b


def test_bundle_schema_keys():
    b = StatBundle((2, 3), 1, 1, 1, {1: 1}, {1: 1}, {Fraction(-1): {1: Fraction(-1)}}, "oracle")
    d = b.to_dict()
    assert set(d) == {"tuple", "g", "n", "s", "s_mu", "shat_mu", "s_mu_lambda", "engine"}
    assert d["s_mu_lambda"] == {"-1": {"1": -1}}


def test_differences_ignores_missing_values():
    x = StatBundle((2, 3), 1, 1, 1, {1: 1, 2: 1})
    y = StatBundle((2, 3), None, 1, 2, {2: 5})
    assert x.differences(y) == ["s", "s_mu[2]"]
