"""
Classical parameters (D, b, alpha, beta) and their intersection arrays.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import List

from src.numerics.rationals import format_rational, parse_rational
from src.utils.errors import InvalidClassicalParameters, InvalidIntersectionArray, RationalParseError

from .intersection_array import IntersectionArray


def q_int(j: int, b) -> Fraction:
    """[j 1]_b = 1 + b + ... + b^(j-1); [0 1]_b = 0."""
    b = Fraction(b)
    total = Fraction(0)
    power = Fraction(1)
    for _ in range(j):
        total += power
        power *= b
    return total


@dataclass(frozen=True)
class ClassicalParameters:
    """Classical parameters of a distance-regular graph.

    For D >= 3 the parameter b must be an integer other than 0 and -1. For
    D = 2 any rational b is accepted and ``outside_lemma_hypothesis`` is set.
    """

    D: int
    b: Fraction
    alpha: Fraction
    beta: Fraction

    def __post_init__(self):
        for name in ("b", "alpha", "beta"):
            object.__setattr__(self, name, Fraction(getattr(self, name)))
        if self.D < 2:
            raise InvalidClassicalParameters(f"diameter must be at least 2, got {self.D}")
        if self.D >= 3:
            if self.b.denominator != 1:
                raise InvalidClassicalParameters(
                    f"b = {format_rational(self.b)} must be an integer for D >= 3"
                )
            if self.b in (0, -1):
                raise InvalidClassicalParameters(f"b must differ from 0 and -1, got {format_rational(self.b)}")

    @property
    def outside_lemma_hypothesis(self) -> bool:
        return self.D == 2

    @classmethod
    def parse(cls, text: str) -> "ClassicalParameters":
        """Parse "D,b,alpha,beta"."""
        parts = [p for p in text.split(",") if p.strip()]
        if len(parts) != 4:
            raise InvalidClassicalParameters(f"classical parameters must be 'D,b,alpha,beta', got {text!r}")
        try:
            d, b, alpha, beta = (parse_rational(p) for p in parts)
        except RationalParseError as exc:
            raise InvalidClassicalParameters(f"bad classical parameters {text!r}: {exc}") from exc
        if d.denominator != 1:
            raise InvalidClassicalParameters(f"D must be an integer, got {text!r}")
        return cls(int(d), b, alpha, beta)

    def c_values(self) -> List[Fraction]:
        b, alpha = self.b, self.alpha
        return [q_int(i, b) * (1 + alpha * q_int(i - 1, b)) for i in range(1, self.D + 1)]

    def b_values(self) -> List[Fraction]:
        b, alpha, beta = self.b, self.alpha, self.beta
        top = q_int(self.D, b)
        return [(top - q_int(i, b)) * (beta - alpha * q_int(i, b)) for i in range(self.D)]

    def to_string(self) -> str:
        return ",".join([str(self.D)] + [format_rational(v) for v in (self.b, self.alpha, self.beta)])

    def __str__(self) -> str:
        return f"({self.to_string()})"


def classical_to_array(params: ClassicalParameters) -> IntersectionArray:
    """The intersection array with c_i, b_i given by the classical formulas."""
    c = params.c_values()
    b = params.b_values()
    if any(v <= 0 for v in c):
        raise InvalidClassicalParameters(f"{params} gives a non-positive c_i: {[format_rational(v) for v in c]}")
    if any(v <= 0 for v in b):
        raise InvalidClassicalParameters(f"{params} gives a non-positive b_i: {[format_rational(v) for v in b]}")
    try:
        return IntersectionArray(tuple(b), tuple(c))
    except InvalidIntersectionArray as exc:
        raise InvalidClassicalParameters(f"{params} does not give a valid intersection array: {exc}") from exc
