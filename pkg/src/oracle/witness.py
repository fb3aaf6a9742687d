"""
Negative-type witnesses and standard-representation Gram matrices.

A constant-row-sum matrix M with exactly one positive eigenvalue has a Gram
matrix G = theta/(2n) J - M/2 that is positive semidefinite; an exact LDL^T
factorisation with non-negative diagonal certifies it.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from src.drg.intersection_array import IntersectionArray
from src.drg.spectrum import multiplicity, standard_sequence
from src.numerics.algebraic import AlgebraicNumber
from src.numerics.matrix import (
    LDLCertificate,
    SymmetricRationalMatrix,
    inertia,
    ldl_psd_certificate,
    verify_ldl_certificate,
)
from src.numerics.rationals import format_rational
from src.utils.errors import CertificateFailure, NotConstantRowSum, NotOnePositive, WitnessFailure

from .graph import DistanceMatrix

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class NegativeTypeWitness:
    gram: SymmetricRationalMatrix
    ldl_certificate: LDLCertificate
    row_sum: Fraction

    def identities_hold(self, matrix: SymmetricRationalMatrix) -> bool:
        """G_xx = theta/(2n) and G_xx + G_yy - 2 G_xy = M_xy everywhere."""
        g = self.gram
        n = g.order
        diag = self.row_sum / (2 * n)
        if any(g[x, x] != diag for x in range(n)):
            return False
        return all(g[x, x] + g[y, y] - 2 * g[x, y] == matrix[x, y] for x in range(n) for y in range(n))

    def to_json(self):
        return {
            "row_sum": format_rational(self.row_sum),
            "order": self.gram.order,
            "ldl_diagonal": [format_rational(v) for v in self.ldl_certificate.diagonal],
        }


def negative_type_witness(matrix: SymmetricRationalMatrix) -> NegativeTypeWitness:
    theta = matrix.constant_row_sum()
    if theta is None:
        raise NotConstantRowSum("matrix does not have constant row sums")
    n_pos = inertia(matrix).n_pos
    if n_pos != 1:
        raise NotOnePositive(f"matrix has {n_pos} positive eigenvalues, not exactly one")
    n = matrix.order
    gram = SymmetricRationalMatrix.ones(n).scale(theta / (2 * n)) - matrix.scale(Fraction(1, 2))
    certificate = ldl_psd_certificate(gram)
    if certificate is None:
        raise WitnessFailure("psd", "Gram matrix is not positive semidefinite")
    if not verify_ldl_certificate(gram, certificate):
        raise WitnessFailure("ldl", "LDL certificate does not reproduce the Gram matrix")
    witness = NegativeTypeWitness(gram, certificate, theta)
    if not witness.identities_hold(matrix):
        raise WitnessFailure("identities", "witness identities fail")
    logger.debug("negative-type witness of order %d, row sum %s", n, theta)
    return witness


def approximate_witness_vectors(witness: NegativeTypeWitness) -> np.ndarray:
    """Row x is an approximate vector u^(x) with Gram matrix G (floating point, for display only)."""
    gram = np.array([[float(v) for v in row] for row in witness.gram.entries])
    values, vectors = np.linalg.eigh(gram)
    values = np.clip(values, 0.0, None)
    return vectors * np.sqrt(values)


def standard_representation_gram(
    ia: IntersectionArray, dm: DistanceMatrix, theta: AlgebraicNumber
) -> SymmetricRationalMatrix:
    """G[x][y] = u_{d(x,y)} for rational theta; checked PSD of rank mult(theta)."""
    u = standard_sequence(ia, theta).rational_values()
    gram = SymmetricRationalMatrix.from_rows([[u[d] for d in row] for row in dm.entries])
    signs = inertia(gram)
    if signs.n_neg != 0:
        raise CertificateFailure("standard_representation_psd", f"Gram matrix at theta = {theta} is not PSD")
    expected = multiplicity(ia, theta)
    if signs.n_pos != expected:
        raise CertificateFailure(
            "standard_representation_rank",
            f"Gram matrix at theta = {theta} has rank {signs.n_pos}, expected {expected}",
        )
    return gram
