from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from abelian_seshadri.arith import (
    format_rational,
    is_perfect_square,
    lcm_of_denominators,
    parse_rational,
    reduce,
    to_decimal_string,
)

rationals = st.fractions()
nonneg = st.fractions(min_value=0)


@pytest.mark.parametrize(
    "num, den, expected",
    [(4, 6, Fraction(2, 3)), (3, -9, Fraction(-1, 3)), (0, 5, Fraction(0, 1))],
)
def test_reduce(num, den, expected):
    q = reduce(num, den)
    assert (q.numerator, q.denominator) == (expected.numerator, expected.denominator)
    assert q.denominator > 0


def test_reduce_zero_denominator():
    with pytest.raises(ZeroDivisionError):
        reduce(1, 0)


@given(st.integers(), st.integers().filter(bool))
def test_reduce_idempotent(p, q):
    r = reduce(p, q)
    assert reduce(r.numerator, r.denominator) == r
    assert (reduce(r.numerator, r.denominator).numerator, reduce(r.numerator, r.denominator).denominator) == (
        r.numerator,
        r.denominator,
    )


@pytest.mark.parametrize("v, root", [(4, Fraction(2)), (Fraction(1, 2), None), (Fraction(9, 4), Fraction(3, 2))])
def test_is_perfect_square(v, root):
    assert is_perfect_square(v) == root


def test_is_perfect_square_negative():
    with pytest.raises(ValueError):
        is_perfect_square(Fraction(-1, 4))


@given(nonneg)
def test_square_root_is_exact(v):
    s = is_perfect_square(v)
    if s is not None:
        assert s >= 0 and s * s == v


@given(nonneg)
def test_squares_are_detected(v):
    assert is_perfect_square(v * v) == v


def test_large_square_without_floats():
    big = 10**40 + 7
    assert is_perfect_square(big * big) == big
    assert is_perfect_square(big * big + 1) is None


@pytest.mark.parametrize(
    "values, n",
    [([Fraction(1, 2), Fraction(1, 3)], 6), ([], 1), ([Fraction(1, 4), 1, 0], 4)],
)
def test_lcm_of_denominators(values, n):
    assert lcm_of_denominators(values) == n


@settings(deadline=None)
@given(st.lists(st.fractions(max_denominator=12), max_size=4))
def test_lcm_is_least(values):
    n = lcm_of_denominators(values)
    assert all((n * v).denominator == 1 for v in values)
    assert not any(all((k * v).denominator == 1 for v in values) for k in range(1, n))


@given(rationals)
def test_format_parse_round_trip(q):
    assert parse_rational(format_rational(q)) == q


def test_format_integer_has_no_slash():
    assert format_rational(Fraction(6, 3)) == "2"
    assert format_rational(Fraction(-1, 3)) == "-1/3"


@pytest.mark.parametrize("text", ["1.5", "1/0", "", "a/b", "1e3", "--1"])
def test_parse_rejects(text):
    with pytest.raises(ValueError):
        parse_rational(text)


def test_decimal_rendering():
    assert to_decimal_string(Fraction(4, 3)) == "1.33333333333"
    assert to_decimal_string(Fraction(2)) == "2"
    assert to_decimal_string(Fraction(3, 5)) == "0.6"
