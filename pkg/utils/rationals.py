"""
Utilities for parsing and formatting exact rational literals
"""
import re
from fractions import Fraction
from typing import Union


# Accepted literal forms:
# - "3"      integer
# - "-2/3"   fraction with optional sign
# - " 1 / 2" whitespace around the slash is tolerated
RATIONAL_PATTERN = re.compile(r'^\s*([+-]?\d+)\s*(?:/\s*(\d+))?\s*$')


def parse_rational(value: Union[str, int, Fraction]) -> Fraction:
    """
    Parse a rational literal into a Fraction in lowest terms.

    Integers and Fractions are passed through unchanged; strings must match
    RATIONAL_PATTERN. Floats are rejected: every weight and mass must be exact.

    Raises:
        ValueError: if the value is not an exact rational literal
    """
    if isinstance(value, bool):
        raise ValueError(f"Boolean is not a rational literal: {value!r}")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if not isinstance(value, str):
        raise ValueError(f"Unsupported rational literal type: {type(value).__name__}")

    match = RATIONAL_PATTERN.match(value)
    if not match:
        raise ValueError(f"Malformed rational literal: {value!r}")

    numerator, denominator = match.groups()
    if denominator is None:
        return Fraction(int(numerator))
    if int(denominator) == 0:
        raise ValueError(f"Zero denominator in rational literal: {value!r}")
    return Fraction(int(numerator), int(denominator))


def format_rational(value: Fraction) -> str:
    """Format a rational as "p" or "p/q" (the inverse of parse_rational)"""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def is_rational_literal(value) -> bool:
    """Check whether a value parses as an exact rational"""
    try:
        parse_rational(value)
    except ValueError:
        return False
    return True
