"""
Rational parsing and formatting.

Rationals cross the CLI and JSON boundaries as "p/q" or "p" strings; floats are
never accepted as input.
"""

import re
from fractions import Fraction
from typing import List, Sequence, Union

from src.utils.errors import RationalParseError

RationalLike = Union[int, Fraction, str]

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+)\s*)?$")


def parse_rational(text: RationalLike) -> Fraction:
    """Parse "p", "-p" or "p/q" into a Fraction."""
    if isinstance(text, Fraction):
        return text
    if isinstance(text, bool):
        raise RationalParseError(f"not a rational: {text!r}")
    if isinstance(text, int):
        return Fraction(text)
    match = _RATIONAL_RE.match(str(text))
    if not match:
        raise RationalParseError(f"not a rational (expected p or p/q): {text!r}")
    num = int(match.group(1))
    den = int(match.group(2)) if match.group(2) is not None else 1
    if den == 0:
        raise RationalParseError(f"zero denominator: {text!r}")
    return Fraction(num, den)


def format_rational(value: Fraction) -> str:
    """Render a Fraction as "p" or "p/q"."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def parse_rational_list(text: str) -> List[Fraction]:
    """Parse a comma separated list of rationals."""
    items = [item for item in text.split(",") if item.strip()]
    if not items:
        raise RationalParseError(f"empty rational list: {text!r}")
    return [parse_rational(item) for item in items]


def parse_rational_range(text: str) -> List[Fraction]:
    """Parse "start:end:step" into the inclusive list start, start+step, ..., <= end."""
    parts = text.split(":")
    if len(parts) != 3:
        raise RationalParseError(f"range must be start:end:step, got {text!r}")
    start, end, step = (parse_rational(part) for part in parts)
    if step <= 0:
        raise RationalParseError(f"range step must be positive: {text!r}")
    values = []
    current = start
    while current <= end:
        values.append(current)
        current += step
    return values


def format_rationals(values: Sequence[Fraction]) -> List[str]:
    return [format_rational(v) for v in values]
