"""Small integer/rational number theory used for exact norm normalization.

The basis-building engines need rational vectors of squared length exactly 1.
When a candidate has squared length q != 1 they multiply it by an element of
a subalgebra whose norm form is a sum of two or four squares, so they need
representations of 1/q in that shape.  Everything here is deterministic and
sized for the small numbers that arise from test algebras; the searches are
plain descending loops with an iteration guard rather than factorization
machinery.
"""

from __future__ import annotations

from fractions import Fraction
from math import isqrt

_SEARCH_CAP = 4_000_000


def sqrt_fraction(q: Fraction) -> Fraction | None:
    """Exact square root of a nonnegative rational, or None."""
    if q < 0:
        return None
    num, den = q.numerator, q.denominator
    rn, rd = isqrt(num), isqrt(den)
    if rn * rn == num and rd * rd == den:
        return Fraction(rn, rd)
    return None


def is_square_fraction(q: Fraction) -> bool:
    return sqrt_fraction(q) is not None


def two_squares(n: int) -> tuple[int, int] | None:
    """n = a^2 + b^2 over the integers, or None.

    Plain descending search; fine for the sizes produced by clearing small
    denominators.  Gives up (returns None) past the iteration cap so callers
    can fall back to a different candidate vector.
    """
    if n < 0:
        return None
    if n == 0:
        return (0, 0)
    steps = 0
    a = isqrt(n)
    while a * a * 2 >= n:
        rest = n - a * a
        b = isqrt(rest)
        if b * b == rest:
            return (a, b)
        a -= 1
        steps += 1
        if steps > _SEARCH_CAP:
            return None
    return None


def _is_three_square(n: int) -> bool:
    # n is a sum of three squares unless it has the form 4^a (8b + 7).
    while n % 4 == 0 and n > 0:
        n //= 4
    return n % 8 != 7


def three_squares(n: int) -> tuple[int, int, int] | None:
    if n < 0 or not _is_three_square(n):
        return None
    steps = 0
    a = isqrt(n)
    while a >= 0:
        two = two_squares(n - a * a)
        if two is not None:
            return (a, *two)
        a -= 1
        steps += 1
        if steps > _SEARCH_CAP:
            return None
    return None


def four_squares(n: int) -> tuple[int, int, int, int]:
    """n = a^2 + b^2 + c^2 + d^2; always exists for n >= 0."""
    if n < 0:
        raise ValueError("negative input")
    if n == 0:
        return (0, 0, 0, 0)
    a = isqrt(n)
    while a >= 0:
        three = three_squares(n - a * a)
        if three is not None:
            return (a, *three)
        a -= 1
    raise RuntimeError(f"four-square search failed for {n}")  # unreachable


def two_squares_fraction(q: Fraction) -> tuple[Fraction, Fraction] | None:
    """q = a^2 + b^2 over the rationals, or None when no representation exists."""
    if q < 0:
        return None
    n, d = q.numerator, q.denominator
    pair = two_squares(n * d)
    if pair is None:
        return None
    return (Fraction(pair[0], d), Fraction(pair[1], d))


def four_squares_fraction(q: Fraction) -> tuple[Fraction, Fraction, Fraction, Fraction]:
    """q = a^2 + b^2 + c^2 + d^2 over the rationals; exists for every q >= 0."""
    if q < 0:
        raise ValueError("negative input")
    n, d = q.numerator, q.denominator
    quad = four_squares(n * d)
    return tuple(Fraction(x, d) for x in quad)  # type: ignore[return-value]
