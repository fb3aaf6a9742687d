"""
Eigenvalues of classical q-type and the classical b-type certificate.

theta != k is of classical q-type when its standard sequence satisfies
u_i = u_{i-1} / q + c for a constant c, equivalently when the differences
d_i = u_i - u_{i-1} shrink by the factor q at every step.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional

from src.drg.classical import ClassicalParameters, classical_to_array
from src.drg.intersection_array import IntersectionArray
from src.drg.spectrum import spectrum_of_gamma, standard_sequence
from src.numerics.algebraic import AlgebraicNumber, evaluate, evaluate_ratio, sign_at
from src.numerics.polynomial import Poly
from src.numerics.rationals import format_rational
from src.utils.errors import CertificateFailure, ThetaEqualsValency

from .coefficients import q_coefficients
from .spectrum import GeneralizedSpectrum, generalized_spectrum, row_sum

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ClassicalTypeReport:
    """Outcome of the classical-type test for one eigenvalue.

    ``q`` is set only for a rational, fully consistent ratio; ``diagnostic``
    explains every other outcome.
    """

    theta: AlgebraicNumber
    q: Optional[Fraction]
    c: Optional[AlgebraicNumber] = None
    closed_form_holds: Optional[bool] = None
    diagnostic: str = ""
    ratio_over_field: Optional[AlgebraicNumber] = None

    @property
    def is_classical(self) -> bool:
        return self.q is not None

    def to_json(self):
        return {
            "theta": self.theta.to_json(),
            "q": format_rational(self.q) if self.q is not None else None,
            "c": self.c.to_json() if self.c is not None else None,
            "closed_form_holds": self.closed_form_holds,
            "diagnostic": self.diagnostic,
            "ratio_over_field": self.ratio_over_field.to_json() if self.ratio_over_field is not None else None,
        }


def _differences(ia: IntersectionArray, theta: AlgebraicNumber) -> List[Poly]:
    seq = standard_sequence(ia, theta)
    return [seq[i] - seq[i - 1] for i in range(1, ia.diameter + 1)]


def _is_zero(theta: AlgebraicNumber, f: Poly) -> bool:
    return sign_at(theta, f) == 0


def detect_classical_type(ia: IntersectionArray, theta: AlgebraicNumber) -> ClassicalTypeReport:
    if theta.is_rational and theta.value == ia.k:
        raise ThetaEqualsValency(f"theta = k = {format_rational(ia.k)} is excluded from the classical-type test")
    d = _differences(ia, theta)
    d1, d2 = d[0], d[1]
    if _is_zero(theta, d2):
        tail_zero = all(_is_zero(theta, di) for di in d[1:])
        reason = "u_i constant for i >= 1 (infinite q)" if tail_zero else "d_2 = 0 but a later difference is not"
        return ClassicalTypeReport(theta, None, diagnostic=reason)

    # d_i q^(i-1) = d_1 for all i, with q = d_1 / d_2, is d_i d_1^(i-2) = d_2^(i-1)
    consistent = all(_is_zero(theta, d[i - 1] * d1 ** (i - 2) - d2 ** (i - 1)) for i in range(3, ia.diameter + 1))
    ratio = evaluate_ratio(theta, d1, d2)
    if not consistent:
        return ClassicalTypeReport(theta, None, diagnostic="ratios d_i / d_(i+1) differ", ratio_over_field=ratio)
    if not ratio.is_rational:
        return ClassicalTypeReport(
            theta,
            None,
            diagnostic="classical type over Q(theta) with an irrational ratio",
            ratio_over_field=ratio,
        )
    q = ratio.value
    x = Poly.x()
    c = evaluate(theta, x / ia.k - Poly.constant(1 / q))
    sigma = q_coefficients(q, ia.diameter).sigma
    seq = standard_sequence(ia, theta)
    closed_form = all(
        _is_zero(theta, seq[i] - (Poly.constant(1) + (x - ia.k) * (sigma[i] / ia.k)))
        for i in range(ia.diameter + 1)
    )
    logger.debug("theta %s of %s is of classical %s-type", theta, ia, format_rational(q))
    return ClassicalTypeReport(theta, q, c, closed_form, diagnostic="classical", ratio_over_field=ratio)


@dataclass(frozen=True)
class ClassicalCertificate:
    """theta = -1 + b_1/b is of classical b-type and the b-distance matrix has three eigenvalues."""

    params: ClassicalParameters
    theta: Fraction
    q: Fraction
    three_distinct: bool
    spectrum: GeneralizedSpectrum = field(compare=False)

    def to_json(self):
        return {
            "classical_parameters": self.params.to_string(),
            "theta": format_rational(self.theta),
            "q": format_rational(self.q),
            "three_distinct": self.three_distinct,
            "spectrum": self.spectrum.to_json(),
        }


def classical_b_type_certificate(params: ClassicalParameters) -> ClassicalCertificate:
    """Check every clause of the classical b-type statement; raises CertificateFailure naming the clause."""
    if params.D < 3:
        raise CertificateFailure("diameter", f"{params} has D < 3; the b-type statement needs D >= 3")
    ia = classical_to_array(params)
    b = params.b
    theta_value = -1 + ia.b[1] / b
    theta = AlgebraicNumber.rational(theta_value)
    gamma = spectrum_of_gamma(ia)
    if not any(t == theta for t in gamma.thetas):
        raise CertificateFailure("eigenvalue", f"{format_rational(theta_value)} is not an eigenvalue of {ia}")
    report = detect_classical_type(ia, theta)
    if report.q != b:
        raise CertificateFailure(
            "classical_type",
            f"theta = {format_rational(theta_value)} of {ia} is not of classical {format_rational(b)}-type "
            f"({report.diagnostic})",
        )
    spectrum = generalized_spectrum(ia, q_coefficients(b, ia.diameter).as_sequence(), gamma)
    merged = spectrum.merged()
    if len(merged) != 3 or not any(eta.sign() == 0 for eta, _ in merged):
        raise CertificateFailure(
            "three_distinct",
            f"{format_rational(b)}-distance matrix of {ia} has eigenvalues {[str(eta) for eta, _ in merged]}",
        )
    rho = spectrum.entries[0][0]
    rho_mult = sum(m for eta, m in merged if eta == rho)
    if not (rho == row_sum(ia, q_coefficients(b, ia.diameter).as_sequence()) and rho_mult == 1):
        raise CertificateFailure("row_sum", f"eigenvalue {rho} on the all-ones vector of {ia} is not the simple row sum")
    return ClassicalCertificate(params, theta_value, b, True, spectrum)
