"""
K_{r,r} stage - the theta_1 inequality and the classical q bound against exhaustive search.
"""

from typing import Any, Dict

from src.oracle.regularity import contains_induced_krr
from src.qdistance.bounds import classical_type_krr_q_bound, krr_bound
from src.qdistance.classical_type import detect_classical_type

from .base import BaseVerifier, VerificationTarget, check


class KrrVerifier(BaseVerifier):
    """An induced K_{r,r} implies the inequality at theta_1 and q >= r - 1 for classical theta_1."""

    def execute(self, target: VerificationTarget, context: Dict[str, Any]) -> Dict[str, Any]:
        max_order = self.config.get("krr_max_order", 64)
        max_r = self.config.get("krr_max_r", 3)
        ia = target.ia
        report = detect_classical_type(ia, target.gamma.thetas[1])
        checks = []
        bounds = {}
        for r in range(2, max_r + 1):
            bound = krr_bound(ia, r)
            bounds[str(r)] = bound.to_json()
            if not target.explicit or target.graph.n > max_order:
                continue
            found = contains_induced_krr(target.graph, r, max_order, max_r)
            if found:
                checks.append(check(f"inequality r={r}", bound.inequality_holds, bound.to_json()))
                if report.q is not None:
                    checks.append(check(f"classical_q r={r}", classical_type_krr_q_bound(report.q, r), str(report.q)))
            else:
                checks.append(check(f"search r={r}", True, "no induced K_{r,r}"))
        result = self.summarize(checks, bounds=bounds)
        if not checks:
            result["status"] = "pass"
        return result
