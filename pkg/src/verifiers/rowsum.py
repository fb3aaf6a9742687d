"""
Row-sum stage - one positive eigenvalue if and only if a negative-type witness exists.
"""

from typing import Any, Dict

from src.oracle.matrices import negative_type_inequality, negative_type_test_vectors
from src.oracle.witness import negative_type_witness, standard_representation_gram
from src.utils.errors import CertificateFailure, NotOnePositive

from .base import BaseVerifier, VerificationTarget, check, q_label


class RowsumVerifier(BaseVerifier):
    """Witness existence against exact inertia, witness identities and sampled negative-type sums."""

    requires_graph = True

    def execute(self, target: VerificationTarget, context: Dict[str, Any]) -> Dict[str, Any]:
        checks = []
        vectors = negative_type_test_vectors(target.graph.n)
        for q in context["q_grid"]:
            label = q_label(q)
            matrix = target.q_matrix(q)
            checks.append(check(f"constant_row_sum q={label}", matrix.constant_row_sum() is not None))
            one_positive = target.q_inertia(q).n_pos == 1
            try:
                witness = negative_type_witness(matrix)
            except NotOnePositive:
                checks.append(check(f"equivalence q={label}", not one_positive, "no witness"))
                continue
            except CertificateFailure as exc:
                checks.append(check(f"equivalence q={label}", False, f"{exc.clause}: {exc}"))
                continue
            checks.append(check(f"equivalence q={label}", one_positive, "witness"))
            checks.append(check(f"identities q={label}", witness.identities_hold(matrix)))
            worst = max(negative_type_inequality(matrix, b) for b in vectors)
            checks.append(check(f"negative_type q={label}", worst <= 0, str(worst)))

        theta1 = target.gamma.thetas[1]
        if theta1.is_rational:
            try:
                standard_representation_gram(target.ia, target.dm, theta1)
                checks.append(check("standard_representation", True, str(theta1)))
            except CertificateFailure as exc:
                checks.append(check("standard_representation", False, f"{exc.clause}: {exc}"))
        return self.summarize(checks)
