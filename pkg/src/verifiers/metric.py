"""
Metric stage - sign and triangle behaviour of q-distances, and the q-ranges that allow one positive eigenvalue.
"""

from typing import Any, Dict

from src.oracle.matrices import semimetric_check
from src.qdistance.bounds import bipartite_positive_root_check

from .base import BaseVerifier, VerificationTarget, check, q_label


class MetricVerifier(BaseVerifier):
    """Nonnegativity, triangle inequality, positive-eigenvalue ranges and the simple spectral radius."""

    def execute(self, target: VerificationTarget, context: Dict[str, Any]) -> Dict[str, Any]:
        ia = target.ia
        checks = []
        c2 = ia.c_at(2)
        for q in context["q_grid"]:
            label = q_label(q)
            in_range = q > 0 or q <= -1
            spectrum = target.analytic_spectrum(q)
            merged = spectrum.merged()
            one_positive = spectrum.positive_count() == 1

            if one_positive:
                checks.append(check(f"one_positive_range q={label}", in_range, "q > 0 or q <= -1"))
                if -1 < q < 1:
                    checks.append(check(f"one_positive_below_one q={label}", c2 == 1 and q > 0, f"c_2 = {c2}"))

            if in_range:
                rho, rho_mult = merged[0]
                checks.append(check(
                    f"three_or_more q={label}",
                    len(merged) >= 3 and rho_mult == 1,
                    f"{len(merged)} distinct, spectral radius multiplicity {rho_mult}",
                ))

            if ia.is_bipartite:
                closed, agrees = bipartite_positive_root_check(ia, q)
                checks.append(check(f"bipartite_minus_k q={label}", agrees, str(closed)))

            if target.explicit:
                nonneg, triangle = semimetric_check(target.dm, q)
                checks.append(check(f"nonnegative q={label}", nonneg == in_range, nonneg))
                if q >= 1 or q <= -2:
                    checks.append(check(f"triangle q={label}", triangle, triangle))

        return self.summarize(checks)
