"""Exact rational scalars.

Every coordinate, vector component and area in this package is a
:class:`fractions.Fraction`. Fractions are always kept in lowest terms with a
positive denominator, and Python integers are unbounded, so no computation
here can overflow or round.

This module adds the few things ``Fraction`` does not provide directly:
a total-order ``cmp``, the ``"p/q"`` text form used by reports, and a checked
best-approximation helper for turning floats (angles) into rationals.
"""

from __future__ import annotations

import math
from fractions import Fraction
from numbers import Rational as _RationalABC

Rational = Fraction

__all__ = [
    "Rational",
    "add",
    "sub",
    "mul",
    "div",
    "neg",
    "cmp",
    "approximate_real",
    "format_rational",
    "parse_rational",
    "as_rational",
]


def add(a: Fraction, b: Fraction) -> Fraction:
    return a + b


def sub(a: Fraction, b: Fraction) -> Fraction:
    return a - b


def mul(a: Fraction, b: Fraction) -> Fraction:
    return a * b


def div(a: Fraction, b: Fraction) -> Fraction:
    """Exact quotient; raises ``ZeroDivisionError`` when ``b == 0``."""
    if b == 0:
        raise ZeroDivisionError(f"division of {format_rational(a)} by zero")
    return a / b


def neg(a: Fraction) -> Fraction:
    return -a


def cmp(a: Fraction, b: Fraction) -> int:
    """Three-way comparison: -1, 0 or 1."""
    return (a > b) - (a < b)


def approximate_real(x: float, max_denominator: int = 10**6) -> Fraction:
    """Closest fraction to ``x`` whose denominator is at most ``max_denominator``.

    The float is first converted exactly (``Fraction(float)`` is lossless), then
    reduced with the continued-fraction convergent/semiconvergent search in
    ``Fraction.limit_denominator``.
    """
    if max_denominator < 1:
        raise ValueError("max_denominator must be >= 1")
    if isinstance(x, _RationalABC):
        return Fraction(x).limit_denominator(max_denominator)
    if not math.isfinite(x):
        raise ValueError(f"cannot approximate non-finite value {x!r}")
    return Fraction(x).limit_denominator(max_denominator)


def format_rational(x: Fraction | int) -> str:
    """``"p/q"``, or ``"p"`` when the denominator is 1."""
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def parse_rational(text: str) -> Fraction:
    """Inverse of :func:`format_rational`. Decimal and float syntax are rejected."""
    s = text.strip()
    num, slash, den = s.partition("/")
    try:
        p = int(num)
        q = int(den) if slash else 1
    except ValueError:
        raise ValueError(f"not a rational of the form p/q: {text!r}") from None
    if q == 0:
        raise ValueError(f"zero denominator in {text!r}")
    return Fraction(p, q)


def as_rational(x: Fraction | int | str) -> Fraction:
    """Coerce ints, fractions and ``"p/q"`` strings; floats are refused."""
    if isinstance(x, str):
        return parse_rational(x)
    if isinstance(x, float):
        raise TypeError("floats are inexact; use approximate_real() or a 'p/q' string")
    return Fraction(x)
