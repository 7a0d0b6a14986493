"""Rational coefficient parsing and formatting."""

from fractions import Fraction
from typing import Union

from precy_bench.utils.exceptions import ValidationError


def parse_rational(value: Union[str, int]) -> Fraction:
    """
    Parse a coefficient written as an integer or a "p/q" string.

    Args:
        value: Integer, "p" or "p/q" text

    Returns:
        Fraction in lowest terms

    Raises:
        ValidationError: If the value is not an exact rational
    """
    if isinstance(value, bool):
        raise ValidationError(f"Non-rational coefficient: {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if not isinstance(value, str):
        raise ValidationError(f"Non-rational coefficient: {value!r}")

    text: str = value.strip()
    if "." in text or "e" in text.lower():
        raise ValidationError(f"Non-rational coefficient: {value!r}")
    try:
        result: Fraction = Fraction(text)
    except (ValueError, ZeroDivisionError) as e:
        raise ValidationError(f"Non-rational coefficient: {value!r}") from e
    return result


def format_rational(value: Fraction) -> str:
    """Format as canonical "p/q" with q > 0 and lowest terms."""
    return f"{value.numerator}/{value.denominator}"
