"""
Coefficient sequences of generalized distance matrices.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Tuple

from src.drg.intersection_array import IntersectionArray
from src.drg.spectrum import standard_sequence
from src.numerics.algebraic import AlgebraicNumber
from src.numerics.rationals import format_rational
from src.utils.errors import ThetaEqualsValency, ZeroQ


@dataclass(frozen=True)
class CoefficientSequence:
    """alpha_0, ..., alpha_D with alpha_0 = 0 and alpha_1 = 1."""

    alpha: Tuple[Fraction, ...]

    def __post_init__(self):
        values = tuple(Fraction(v) for v in self.alpha)
        object.__setattr__(self, "alpha", values)
        if len(values) < 2 or values[0] != 0 or values[1] != 1:
            raise ValueError(f"coefficient sequence must start 0, 1: {[format_rational(v) for v in values]}")

    @classmethod
    def of(cls, values: Sequence) -> "CoefficientSequence":
        return cls(tuple(values))

    @property
    def diameter(self) -> int:
        return len(self.alpha) - 1

    def __getitem__(self, i: int) -> Fraction:
        return self.alpha[i]

    def __len__(self) -> int:
        return len(self.alpha)

    def to_json(self):
        return [format_rational(v) for v in self.alpha]


@dataclass(frozen=True)
class QCoefficients:
    """sigma_i = 1 + 1/q + ... + 1/q^(i-1) for the q-distance matrix."""

    q: Fraction
    sigma: Tuple[Fraction, ...]

    def as_sequence(self) -> CoefficientSequence:
        return CoefficientSequence(self.sigma)

    def to_json(self):
        return {"q": format_rational(self.q), "sigma": [format_rational(v) for v in self.sigma]}


def q_coefficients(q, D: int) -> QCoefficients:
    q = Fraction(q)
    if q == 0:
        raise ZeroQ("q must be nonzero")
    sigma = [Fraction(0), Fraction(1)]
    for _ in range(2, D + 1):
        sigma.append(sigma[-1] / q + 1)
    return QCoefficients(q, tuple(sigma[: D + 1]))


def standard_coefficients(ia: IntersectionArray, theta: AlgebraicNumber) -> CoefficientSequence:
    """alpha_i = (1 - u_i) / (1 - u_1), the standard generalized distance matrix of theta.

    Only rational theta is supported; theta = k has no standard matrix.
    """
    if theta.is_rational and theta.value == ia.k:
        raise ThetaEqualsValency(f"theta = k = {format_rational(ia.k)} has no standard coefficients")
    u = standard_sequence(ia, theta).rational_values()
    denominator = 1 - u[1]
    return CoefficientSequence(tuple((1 - v) / denominator for v in u))
