"""Exact rational scalars.

``fractions.Fraction`` already keeps numerator and denominator in lowest terms
with a positive denominator, so it is used directly as the universal scalar.
This module only adds strict parsing and the ``"p/q"`` text form used for I/O.
"""
from __future__ import annotations

from fractions import Fraction
from numbers import Rational as _RationalABC

Rational = Fraction

__all__ = ["Rational", "as_rational", "format_rational", "parse_rational", "as_integer"]


def as_rational(value: object) -> Fraction:
    """Coerce an int, Fraction or ``"p/q"`` string to a Fraction.

    Floats are rejected: nothing in this package is allowed to go through
    binary floating point.
    """
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, _RationalABC):
        return Fraction(value.numerator, value.denominator)
    if isinstance(value, str):
        return parse_rational(value)
    raise TypeError(f"cannot use {type(value).__name__} as an exact rational")


def parse_rational(text: str) -> Fraction:
    text = text.strip()
    num, sep, den = text.partition("/")
    try:
        if sep:
            return Fraction(int(num), int(den))
        return Fraction(int(num))
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"not an exact rational: {text!r}") from exc


def format_rational(q: Fraction | int) -> str:
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def as_integer(q: Fraction | int) -> int | None:
    """Return ``q`` as an int when it is integral, else None."""
    q = Fraction(q)
    return q.numerator if q.denominator == 1 else None
