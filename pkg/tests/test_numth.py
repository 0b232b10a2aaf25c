"""Square detection and the two/four-square decompositions."""

from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from cdalg.numth import (
    four_squares,
    four_squares_fraction,
    is_square_fraction,
    sqrt_fraction,
    three_squares,
    two_squares,
    two_squares_fraction,
)


def test_sqrt_fraction():
    assert sqrt_fraction(Fraction(9, 4)) == Fraction(3, 2)
    assert sqrt_fraction(Fraction(0)) == 0
    assert sqrt_fraction(Fraction(2)) is None
    assert sqrt_fraction(Fraction(-1)) is None
    assert is_square_fraction(Fraction(49, 16))


def test_two_squares_known_values():
    assert two_squares(0) == (0, 0)
    a, b = two_squares(25)
    assert a * a + b * b == 25
    assert two_squares(3) is None
    assert two_squares(21) is None  # 3 * 7, both bad primes to odd powers


@settings(max_examples=80, deadline=None)
@given(st.integers(min_value=0, max_value=5000))
def test_four_squares_always(n):
    a, b, c, d = four_squares(n)
    assert a * a + b * b + c * c + d * d == n


def test_three_squares_obstruction():
    assert three_squares(7) is None
    assert three_squares(28) is None  # 4 * 7
    got = three_squares(11)
    assert got is not None and sum(x * x for x in got) == 11


def test_two_squares_fraction():
    got = two_squares_fraction(Fraction(1, 2))
    assert got is not None
    a, b = got
    assert a * a + b * b == Fraction(1, 2)
    assert two_squares_fraction(Fraction(1, 3)) is None


@settings(max_examples=40, deadline=None)
@given(st.fractions(min_value=0, max_value=50, max_denominator=20))
def test_four_squares_fraction_always(q):
    quad = four_squares_fraction(q)
    assert sum(x * x for x in quad) == q
