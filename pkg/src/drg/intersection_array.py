"""
Intersection arrays of distance-regular graphs and their derived counts.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Tuple

from src.numerics.rationals import format_rational, parse_rational
from src.utils.errors import InvalidIntersectionArray, NonIntegralCount, RationalParseError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class IntersectionArray:
    """The array {b_0, ..., b_{D-1}; c_1, ..., c_D}.

    Entries are rationals; construction validates positivity, c_1 = 1,
    a_i >= 0, monotonicity and integrality of every k_i.
    """

    b: Tuple[Fraction, ...]
    c: Tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "b", tuple(Fraction(v) for v in self.b))
        object.__setattr__(self, "c", tuple(Fraction(v) for v in self.c))
        self._validate()

    def _validate(self):
        b, c = self.b, self.c
        if len(b) != len(c):
            raise InvalidIntersectionArray(f"b and c must have the same length, got {len(b)} and {len(c)}")
        if len(b) < 2:
            raise InvalidIntersectionArray(f"diameter must be at least 2, got {len(b)}")
        if any(v <= 0 for v in b + c):
            raise InvalidIntersectionArray(f"entries must be positive: {self}")
        if c[0] != 1:
            raise InvalidIntersectionArray(f"c_1 must be 1, got {format_rational(c[0])}")
        for i, a in enumerate(self.a):
            if a < 0:
                raise InvalidIntersectionArray(f"a_{i} = {format_rational(a)} < 0 in {self}")
        for i in range(len(c) - 1):
            if c[i] > c[i + 1]:
                raise InvalidIntersectionArray(f"c_{i + 1} > c_{i + 2} in {self}")
            if b[i] < b[i + 1]:
                raise InvalidIntersectionArray(f"b_{i} < b_{i + 1} in {self}")
        subconstituents(self)

    @classmethod
    def parse(cls, text: str) -> "IntersectionArray":
        """Parse "b0,b1,...;c1,...,cD"."""
        cleaned = text.strip().strip("{}")
        if cleaned.count(";") != 1:
            raise InvalidIntersectionArray(f"intersection array must look like 'b0,...;c1,...', got {text!r}")
        left, right = cleaned.split(";")
        try:
            b = [parse_rational(v) for v in left.split(",") if v.strip()]
            c = [parse_rational(v) for v in right.split(",") if v.strip()]
        except RationalParseError as exc:
            raise InvalidIntersectionArray(f"bad entry in {text!r}: {exc}") from exc
        return cls(tuple(b), tuple(c))

    @property
    def diameter(self) -> int:
        return len(self.b)

    D = diameter

    @property
    def k(self) -> Fraction:
        return self.b[0]

    def b_at(self, i: int) -> Fraction:
        """b_i with b_D = 0."""
        return self.b[i] if i < self.diameter else Fraction(0)

    def c_at(self, i: int) -> Fraction:
        """c_i with c_0 = 0."""
        return self.c[i - 1] if i > 0 else Fraction(0)

    @property
    def a(self) -> Tuple[Fraction, ...]:
        return tuple(self.k - self.c_at(i) - self.b_at(i) for i in range(self.diameter + 1))

    def a_at(self, i: int) -> Fraction:
        return self.k - self.c_at(i) - self.b_at(i)

    @property
    def is_bipartite(self) -> bool:
        return all(a == 0 for a in self.a)

    @property
    def sizes(self) -> Tuple[int, ...]:
        return subconstituents(self)[0]

    @property
    def n(self) -> int:
        return subconstituents(self)[1]

    def tridiagonal_rows(self) -> List[List[Fraction]]:
        """Rows (c_i, a_i, b_i) of the (D+1)x(D+1) intersection matrix."""
        size = self.diameter + 1
        rows = [[Fraction(0)] * size for _ in range(size)]
        for i in range(size):
            if i > 0:
                rows[i][i - 1] = self.c_at(i)
            rows[i][i] = self.a_at(i)
            if i < self.diameter:
                rows[i][i + 1] = self.b_at(i)
        return rows

    def to_string(self) -> str:
        return ",".join(format_rational(v) for v in self.b) + ";" + ",".join(format_rational(v) for v in self.c)

    def __str__(self) -> str:
        return "{" + self.to_string() + "}"


def subconstituents(ia: IntersectionArray) -> Tuple[Tuple[int, ...], int]:
    """(k_0, ..., k_D) and n from k_0 = 1, k_{i+1} = k_i b_i / c_{i+1}."""
    sizes: List[Fraction] = [Fraction(1)]
    for i in range(ia.diameter):
        sizes.append(sizes[-1] * ia.b[i] / ia.c[i])
    for i, value in enumerate(sizes):
        if value.denominator != 1:
            raise NonIntegralCount(f"k_{i} = {format_rational(value)} is not an integer for {ia}")
    ints = tuple(int(v) for v in sizes)
    return ints, sum(ints)

