"""
Oracle agreement stage - analytic generalized spectra against explicit q-distance spectra.
"""

from typing import Any, Dict

from src.numerics.algebraic import multisets_equal
from src.oracle.matrices import explicit_spectrum

from .base import BaseVerifier, VerificationTarget, check, q_label


class OracleAgreementVerifier(BaseVerifier):
    """Exact multiset comparison for every q of the grid."""

    requires_graph = True

    def execute(self, target: VerificationTarget, context: Dict[str, Any]) -> Dict[str, Any]:
        checks = []
        one_positive = {}
        for q in context["q_grid"]:
            analytic = target.analytic_spectrum(q)
            explicit = explicit_spectrum(target.q_matrix(q), self.config.get("order_limit"))
            agree = multisets_equal(analytic.merged(), explicit)
            checks.append(check(f"q={q_label(q)}", agree, None if agree else [str(v) for v, _ in explicit]))
            one_positive[q_label(q)] = target.q_inertia(q).n_pos == 1
        return self.summarize(checks, one_positive=one_positive)
