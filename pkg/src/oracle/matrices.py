"""
Explicit matrices built from graphs and their exact spectra.
"""

import logging
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from src.numerics.algebraic import AlgebraicNumber, evaluate, multisets_equal, refine, sturm_isolate
from src.numerics.matrix import SymmetricRationalMatrix, charpoly
from src.numerics.polynomial import Poly, squarefree_decomposition
from src.qdistance.coefficients import CoefficientSequence, q_coefficients
from src.utils.config import get_config
from src.utils.errors import OrderLimitExceeded

from .families import clique_extension
from .graph import DistanceMatrix, Graph

logger = logging.getLogger(__name__)

Spectrum = List[Tuple[AlgebraicNumber, int]]


def adjacency_matrix(g: Graph) -> SymmetricRationalMatrix:
    rows = [[0] * g.n for _ in range(g.n)]
    for x, y in g.edges():
        rows[x][y] = rows[y][x] = 1
    return SymmetricRationalMatrix.from_rows(rows)


def generalized_distance_matrix(dm: DistanceMatrix, alpha: CoefficientSequence) -> SymmetricRationalMatrix:
    """Entry (x, y) = alpha_{d(x,y)}."""
    if len(alpha) <= dm.diameter:
        raise ValueError(f"coefficient sequence too short for diameter {dm.diameter}")
    return SymmetricRationalMatrix.from_rows([[alpha[d] for d in row] for row in dm.entries])


def q_distance_matrix(dm: DistanceMatrix, q) -> SymmetricRationalMatrix:
    """Entry (x, y) = 1 + 1/q + ... + 1/q^(d(x,y)-1); zero diagonal."""
    sigma = q_coefficients(q, dm.diameter).as_sequence()
    return generalized_distance_matrix(dm, sigma)


def default_order_limit() -> int:
    return int(get_config().get("numerics.order_limit", 64))


def explicit_spectrum(matrix: SymmetricRationalMatrix, order_limit: Optional[int] = None) -> Spectrum:
    """Eigenvalues with multiplicities, descending, from the square-free decomposition of the charpoly."""
    limit = order_limit if order_limit is not None else default_order_limit()
    if matrix.order > limit:
        raise OrderLimitExceeded(f"matrix of order {matrix.order} exceeds the limit {limit}")
    p = charpoly(matrix)
    spectrum: Spectrum = []
    for factor, mult in squarefree_decomposition(p):
        spectrum.extend((root, mult) for root in sturm_isolate(factor))
    spectrum.sort(key=lambda entry: _Descending(entry[0]))
    total = sum(m for _, m in spectrum)
    if total != matrix.order:
        raise ArithmeticError(f"found {total} real eigenvalues for a symmetric matrix of order {matrix.order}")
    logger.debug("explicit spectrum of order %d: %d distinct values", matrix.order, len(spectrum))
    return spectrum


class _Descending:
    __slots__ = ("value",)

    def __init__(self, value: AlgebraicNumber):
        self.value = value

    def __lt__(self, other: "_Descending") -> bool:
        return self.value > other.value


def sorted_eigenvalues(spectrum: Spectrum) -> List[AlgebraicNumber]:
    """Eigenvalues repeated by multiplicity, descending."""
    out: List[AlgebraicNumber] = []
    for value, mult in spectrum:
        out.extend([value] * mult)
    return out


def semimetric_check(dm: DistanceMatrix, q) -> Tuple[bool, bool]:
    """(all entries of the q-distance matrix >= 0, triangle inequality over all vertex triples)."""
    sigma = q_coefficients(q, dm.diameter).sigma
    present = {d for row in dm.entries for d in row if d > 0}
    nonneg = all(sigma[d] >= 0 for d in present)
    triangle = all(sigma[a] + sigma[b] >= sigma[c] for a, b, c in dm.distance_triples)
    return nonneg, triangle


def negative_type_inequality(matrix: SymmetricRationalMatrix, b: Sequence[int]) -> Fraction:
    """sum_{x,y} b_x b_y M[x][y] for an integer vector b summing to zero."""
    if len(b) != matrix.order:
        raise ValueError(f"vector has length {len(b)}, expected {matrix.order}")
    if sum(b) != 0:
        raise ValueError("negative-type test vectors must sum to zero")
    total = Fraction(0)
    for x, bx in enumerate(b):
        if bx:
            row = matrix.entries[x]
            total += bx * sum((by * row[y] for y, by in enumerate(b) if by), Fraction(0))
    return total


def negative_type_test_vectors(n: int) -> List[List[int]]:
    """Deterministic zero-sum vectors: e_0 - e_y, and alternating +-1 patterns."""
    vectors = []
    for y in range(1, n):
        v = [0] * n
        v[0], v[y] = 1, -1
        vectors.append(v)
    half = n - n % 2
    for shift in range(min(n, 4)):
        v = [0] * n
        for i in range(half):
            v[(i + shift) % n] = 1 if i % 2 == 0 else -1
        vectors.append(v)
    return vectors


def clique_extension_spectrum_check(g: Graph, s: int, order_limit: Optional[int] = None) -> bool:
    """Explicit spectrum of the s-clique extension against {s(theta+1)-1} plus -1 with multiplicity (s-1)n."""
    base = explicit_spectrum(adjacency_matrix(g), order_limit)
    x = Poly.x()
    mapped: Spectrum = [(evaluate(theta, x * s + (s - 1)), m) for theta, m in base]
    if s > 1:
        mapped.append((AlgebraicNumber.rational(-1), (s - 1) * g.n))
    extended = explicit_spectrum(adjacency_matrix(clique_extension(g, s)), order_limit)
    return multisets_equal(mapped, extended)


def interlacing_holds(
    outer: SymmetricRationalMatrix,
    indices: Sequence[int],
    width: Fraction = Fraction(1, 10**6),
    order_limit: Optional[int] = None,
) -> bool:
    """eta_{n-m+i}(B) <= eta_i(C) <= eta_i(B) for the principal submatrix C on ``indices``.

    Comparisons are exact; ``width`` only bounds the refinement used to order the values.
    """
    big = [refine(v, width) for v in sorted_eigenvalues(explicit_spectrum(outer, order_limit))]
    small = [refine(v, width) for v in sorted_eigenvalues(explicit_spectrum(outer.principal_submatrix(indices), order_limit))]
    n, m = len(big), len(small)
    return all(big[n - m + i] <= small[i] <= big[i] for i in range(m))
