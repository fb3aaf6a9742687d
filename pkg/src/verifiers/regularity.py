"""
Regularity stage - the explicit graph and the classical parameters reproduce the stated array.
"""

from typing import Any, Dict

from src.drg.classical import classical_to_array
from src.numerics.algebraic import AlgebraicNumber, multisets_equal
from src.numerics.rationals import parse_rational
from src.oracle.matrices import adjacency_matrix, explicit_spectrum
from src.oracle.regularity import verify_distance_regular

from .base import BaseVerifier, VerificationTarget, check


def _snapshot(expected: Dict[str, int]):
    return [(AlgebraicNumber.rational(parse_rational(v)), m) for v, m in expected.items()]


class RegularityVerifier(BaseVerifier):
    """Checks the intersection array against every independent source available."""

    def execute(self, target: VerificationTarget, context: Dict[str, Any]) -> Dict[str, Any]:
        ia = target.ia
        checks = []
        gamma = target.gamma
        checks.append(check(
            "spectrum_of_gamma",
            len(gamma) == ia.diameter + 1 and sum(gamma.multiplicities) == ia.n,
            f"{len(gamma)} eigenvalues, multiplicities sum to {sum(gamma.multiplicities)}",
        ))

        if target.params is not None:
            derived = classical_to_array(target.params)
            checks.append(check("classical_parameters", derived == ia, f"{target.params} -> {derived}"))

        if target.explicit:
            found = verify_distance_regular(target.graph, target.dm)
            checks.append(check("distance_regular", found == ia, f"found {found}, stated {ia}"))
            explicit = explicit_spectrum(adjacency_matrix(target.graph), self.config.get("order_limit"))
            checks.append(check(
                "adjacency_spectrum",
                multisets_equal(list(gamma), explicit),
                [str(theta) for theta, _ in explicit],
            ))

        for key, expected in target.entry.expected.items():
            q = parse_rational(key[1:])
            merged = target.analytic_spectrum(q).merged()
            checks.append(check(f"snapshot_{key}", multisets_equal(merged, _snapshot(expected)), expected))

        return self.summarize(checks)
