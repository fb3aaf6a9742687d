"""
Spectra of generalized distance matrices computed from the intersection array.

For an eigenvalue theta of the graph with standard sequence (u_i), the matrix
sum_i alpha_i A_i acts on the theta-eigenspace as eta = sum_i alpha_i k_i u_i.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Tuple

from src.drg.intersection_array import IntersectionArray
from src.drg.spectrum import SpectrumOfGamma, StandardSequence, exact_weighted_sum, spectrum_of_gamma, standard_sequence
from src.numerics.algebraic import AlgebraicNumber, evaluate, merge_equal, reduce_mod, sign_at
from src.numerics.polynomial import Poly
from src.numerics.rationals import format_rational
from src.utils.errors import InvalidIntersectionArray

from .coefficients import CoefficientSequence

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class GeneralizedSpectrum:
    """(eta, multiplicity, source theta) per eigenvalue of the graph.

    Equal eta values from different sources are kept apart; ``merged`` combines
    them for distinct and positive counts.
    """

    entries: Tuple[Tuple[AlgebraicNumber, int, AlgebraicNumber], ...]

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def merged(self) -> List[Tuple[AlgebraicNumber, int]]:
        """Distinct eigenvalues with summed multiplicities, descending."""
        return merge_equal([(eta, m) for eta, m, _ in self.entries])

    def distinct_count(self) -> int:
        return len(self.merged())

    def positive_count(self) -> int:
        return positive_count(self)

    def distinct_positive_count(self) -> int:
        return sum(1 for eta, _ in self.merged() if eta.sign() > 0)

    def has_zero(self) -> bool:
        return any(eta.sign() == 0 for eta, _, _ in self.entries)

    @property
    def order(self) -> int:
        return sum(m for _, m, _ in self.entries)

    def to_json(self):
        return {
            "entries": [
                {"eta": eta.to_json(), "multiplicity": m, "source_theta": theta.to_json()}
                for eta, m, theta in self.entries
            ],
            "merged": [{"eta": eta.to_json(), "multiplicity": m} for eta, m in self.merged()],
        }


def eigenvalue_polynomial(ia: IntersectionArray, alpha: CoefficientSequence, seq: StandardSequence) -> Poly:
    """sum_{i>=1} alpha_i k_i u_i as a polynomial in theta."""
    if len(alpha) != ia.diameter + 1:
        raise ValueError(f"coefficient sequence has length {len(alpha)}, expected {ia.diameter + 1}")
    total = Poly()
    for i in range(1, ia.diameter + 1):
        total = total + seq[i] * (alpha[i] * ia.sizes[i])
    return total


def generalized_eigenvalue(ia: IntersectionArray, alpha: CoefficientSequence, theta: AlgebraicNumber) -> AlgebraicNumber:
    seq = standard_sequence(ia, theta)
    return evaluate(theta, eigenvalue_polynomial(ia, alpha, seq))


def generalized_spectrum(
    ia: IntersectionArray,
    alpha: CoefficientSequence,
    gamma: Optional[SpectrumOfGamma] = None,
) -> GeneralizedSpectrum:
    """One entry per eigenvalue theta_j with multiplicity mult(theta_j).

    The zero-diagonal trace identity sum mult * eta = 0 is checked exactly.
    """
    gamma = gamma or spectrum_of_gamma(ia)
    entries = []
    for theta, m in gamma:
        seq = standard_sequence(ia, theta)
        eta = evaluate(theta, reduce_mod(eigenvalue_polynomial(ia, alpha, seq), theta))
        entries.append((eta, m, theta))
    trace = exact_weighted_sum(ia, gamma, lambda seq: eigenvalue_polynomial(ia, alpha, seq))
    if trace != 0:
        raise InvalidIntersectionArray(
            f"generalized spectrum of {ia} has trace {format_rational(trace)}, expected 0"
        )
    spectrum = GeneralizedSpectrum(tuple(entries))
    logger.debug("generalized spectrum of %s: %d entries", ia, len(entries))
    return spectrum


def positive_count(spec: GeneralizedSpectrum) -> int:
    """Total multiplicity of the positive eigenvalues."""
    return sum(m for eta, m, _ in spec.entries if sign_at(eta, Poly.x()) > 0)


def row_sum(ia: IntersectionArray, alpha: CoefficientSequence) -> Fraction:
    """sum_i alpha_i k_i, the eigenvalue on the all-ones vector."""
    return sum((alpha[i] * ia.sizes[i] for i in range(1, ia.diameter + 1)), Fraction(0))
