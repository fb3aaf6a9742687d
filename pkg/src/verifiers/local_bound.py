"""
Local bound stage - local graph eigenvalue bounds wherever the q-distance matrix has one positive eigenvalue.
"""

from fractions import Fraction
from typing import Any, Dict

from src.oracle.local import local_interlacing_check, local_min_eigenvalue_bound_check
from src.oracle.matrices import interlacing_holds

from .base import BaseVerifier, VerificationTarget, check, q_label


class LocalBoundVerifier(BaseVerifier):
    requires_graph = True

    def execute(self, target: VerificationTarget, context: Dict[str, Any]) -> Dict[str, Any]:
        width = self.config.get("interlacing_width", Fraction(1, 10**6))
        checks = []
        for q in context["q_grid"]:
            if target.q_inertia(q).n_pos != 1:
                continue
            label = q_label(q)
            checks.append(check(f"local_bound q={label}", local_min_eigenvalue_bound_check(target.graph, q, target.dm)))
            per_vertex = local_interlacing_check(target.graph, q, target.dm)
            checks.append(check(f"interlacing q={label}", all(per_vertex), sum(per_vertex)))
            # Cauchy interlacing on the neighbourhood of vertex 0, compared exactly
            neighbourhood = target.graph.neighbours(0)
            checks.append(check(
                f"cauchy_interlacing q={label}",
                interlacing_holds(target.q_matrix(q), neighbourhood, width, self.config.get("order_limit")),
            ))
        result = self.summarize(checks)
        if not checks:
            result["reason"] = "no q with exactly one positive eigenvalue"
        return result
