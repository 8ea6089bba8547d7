"""Exact scalar helpers: generalized binomials and rising factorials.

All exact arithmetic in this package runs on ``fractions.Fraction``; complex
floats are a separate numeric layer and conversions are always explicit.
"""

from __future__ import annotations

from fractions import Fraction

Rational = Fraction


def to_rational(x) -> Fraction:
    """Coerce ints/Fractions (and exact strings like '2/3') to Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"not an exact rational: {x!r}")


def binom(beta, j: int) -> Fraction:
    """Generalized binomial coefficient beta*(beta-1)*...*(beta-j+1)/j!.

    Defined for any rational beta and nonnegative integer j; equals 1 at j=0.
    """
    if j < 0:
        raise ValueError("binom needs j >= 0")
    beta = to_rational(beta)
    num = Fraction(1)
    for k in range(j):
        num *= beta - k
    for k in range(2, j + 1):
        num /= k
    return num


def pochhammer(theta, j: int) -> Fraction:
    """Rising factorial theta*(theta+1)*...*(theta+j-1); equals 1 at j=0."""
    if j < 0:
        raise ValueError("pochhammer needs j >= 0")
    theta = to_rational(theta)
    out = Fraction(1)
    for k in range(j):
        out *= theta + k
    return out
