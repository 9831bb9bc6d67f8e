import math
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from dcsums import binomial, format_rational, parse_rational, rat_pow

rationals = st.fractions(min_value=-10**9, max_value=10**9, max_denominator=10**6)


def test_binomial_base_cases():
    assert binomial(5, 0) == 1
    assert binomial(3, 1) == 3
    assert binomial(5, 2) == 10  # matches the Pascal-triangle oracle below
    assert binomial(0, 0) == 1


def test_binomial_vanishes_above_triangle():
    assert binomial(3, 5) == 0
    assert binomial(0, 1) == 0
    assert binomial(7, 100) == 0


def test_binomial_rejects_negative_arguments():
    with pytest.raises(ValueError):
        binomial(-1, 0)
    with pytest.raises(ValueError):
        binomial(3, -2)


def test_binomial_satisfies_pascal_recurrence():
    # Independent oracle: build the triangle row by row.
    row = [1]
    for n in range(1, 61):
        row = [1] + [row[i] + row[i + 1] for i in range(len(row) - 1)] + [1]
        for k in range(1, n + 1):
            assert binomial(n, k) == row[k]
            assert binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k)


def test_rat_pow_examples():
    assert rat_pow(Fraction(1, 2), 3) == Fraction(1, 8)
    assert rat_pow(Fraction(-2, 3), 2) == Fraction(4, 9)
    assert rat_pow(Fraction(7, 5), 0) == 1
    assert rat_pow(0, 0) == 1
    assert rat_pow(Fraction(0), 0) == 1


def test_rat_pow_rejects_negative_exponent():
    with pytest.raises(ValueError):
        rat_pow(Fraction(1, 2), -1)


def test_format_rational():
    assert format_rational(Fraction(13, 54)) == "13/54"
    assert format_rational(Fraction(-1, 2)) == "-1/2"
    assert format_rational(Fraction(4, 2)) == "2"
    assert format_rational(Fraction(0)) == "0"
    assert format_rational(-7) == "-7"


def test_parse_rational_accepts_canonical_and_unreduced_forms():
    assert parse_rational("13/54") == Fraction(13, 54)
    assert parse_rational("-13/108") == Fraction(-13, 108)
    assert parse_rational("7") == 7
    assert parse_rational("-2") == -2
    assert parse_rational("4/2") == 2
    assert parse_rational(" 1/3 ") == Fraction(1, 3)


@pytest.mark.parametrize("bad", ["", "1.5", "+3", "1/-2", "a/b", "1/2/3", "1/0", "--1"])
def test_parse_rational_rejects_non_literals(bad):
    with pytest.raises(ValueError):
        parse_rational(bad)


@given(rationals, rationals)
def test_addition_is_exact(a, b):
    assert (a + b) - b == a


@given(rationals, rationals.filter(lambda q: q != 0))
def test_multiplication_is_exact(a, b):
    assert (a * b) / b == a


@given(rationals)
def test_canonical_form_invariants(q):
    assert q.denominator > 0
    assert math.gcd(abs(q.numerator), q.denominator) == 1
    assert parse_rational(format_rational(q)) == q
