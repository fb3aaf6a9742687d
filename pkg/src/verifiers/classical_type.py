"""
Classical type stage - detection per eigenvalue, the three-eigenvalue property and the b-type certificate.
"""

from typing import Any, Dict

from src.numerics.rationals import format_rational
from src.qdistance.bounds import quadrangle_equality_check
from src.qdistance.classical_type import classical_b_type_certificate, detect_classical_type
from src.utils.errors import CertificateFailure

from .base import BaseVerifier, VerificationTarget, check


class ClassicalTypeVerifier(BaseVerifier):
    """For every theta != k of classical q-type, the q-distance matrix has three eigenvalues, one of them 0."""

    def execute(self, target: VerificationTarget, context: Dict[str, Any]) -> Dict[str, Any]:
        ia = target.ia
        gamma = target.gamma
        thetas = gamma.thetas
        checks = []
        detected = {}

        for index, theta in enumerate(thetas[1:], start=1):
            report = detect_classical_type(ia, theta)
            if report.q is None:
                continue
            q = report.q
            label = f"theta={theta}"
            detected[str(theta)] = format_rational(q)
            checks.append(check(f"closed_form {label}", bool(report.closed_form_holds), report.diagnostic))
            checks.append(check(f"q_range {label}", q > 0 or q <= -1, format_rational(q)))
            if q > 0:
                checks.append(check(f"positive_q_is_theta1 {label}", index == 1, f"index {index}"))
            if q == -1:
                checks.append(check(f"minus_one_is_minus_k {label}", theta == -ia.k, str(theta)))

            spectrum = target.analytic_spectrum(q)
            others_zero = all(
                eta.sign() == 0 for eta, _, source in spectrum if not (source == ia.k or source == theta)
            )
            merged = spectrum.merged()
            three = len(merged) == 3 and any(eta.sign() == 0 for eta, _ in merged)
            checks.append(check(f"three_eigenvalues {label}", others_zero and three, [str(e) for e, _ in merged]))

        if target.params is not None and target.params.D >= 3:
            try:
                cert = classical_b_type_certificate(target.params)
                checks.append(check("b_type_certificate", cert.three_distinct, f"theta = {format_rational(cert.theta)}"))
            except CertificateFailure as exc:
                checks.append(check("b_type_certificate", False, f"{exc.clause}: {exc}"))

        quad = quadrangle_equality_check(ia)
        if quad.applies:
            checks.append(check("quadrangle_equality", bool(quad.holds), quad.to_json()))

        result = self.summarize(checks, classical_q=detected)
        if not checks:
            result["status"] = "pass"
        return result
