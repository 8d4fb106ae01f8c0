"""
Exact rational scalars.

Every coefficient in the system is a ``fractions.Fraction``: always reduced,
positive denominator, no rounding anywhere.
"""

from fractions import Fraction
from typing import Union

Rational = Fraction

RationalLike = Union[int, Fraction, str]


def as_rational(value: RationalLike) -> Fraction:
    """
    Coerce an integer, Fraction or "num/den" string to a Fraction.

    Floats are refused: they would smuggle rounding into exact data.
    """
    if isinstance(value, bool):
        raise ValueError(f"not a rational: {value!r}")
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise ValueError(f"not a rational: {value!r}")


def format_rational(value: Fraction) -> str:
    """Serialize as "num/den", omitting the denominator when it is 1."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def parse_rational(text: str) -> Fraction:
    """Inverse of format_rational; accepts "3", "-3", "3/4"."""
    cleaned = text.strip()
    if not cleaned or '.' in cleaned or 'e' in cleaned.lower():
        raise ValueError(f"not an exact rational: {text!r}")
    try:
        return Fraction(cleaned)
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"not an exact rational: {text!r}") from exc
