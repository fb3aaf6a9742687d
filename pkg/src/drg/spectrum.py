"""
Eigenvalues, standard sequences and multiplicities of a distance-regular graph,
computed from its intersection array alone.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, List, Tuple

from src.numerics.algebraic import (
    AlgebraicNumber,
    evaluate,
    evaluate_ratio,
    reduce_mod,
    sturm_isolate,
)
from src.numerics.polynomial import Poly, poly_gcd, trace_mod
from src.numerics.rationals import format_rational
from src.utils.errors import InvalidIntersectionArray, NonIntegralMultiplicity

from .intersection_array import IntersectionArray

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class StandardSequence:
    """u_0, ..., u_D for an eigenvalue theta, each a polynomial in theta reduced modulo its minimal polynomial."""

    theta: AlgebraicNumber
    entries: Tuple[Poly, ...]

    def __len__(self) -> int:
        return len(self.entries)

    def __getitem__(self, i: int) -> Poly:
        return self.entries[i]

    def value(self, i: int) -> AlgebraicNumber:
        return evaluate(self.theta, self.entries[i])

    def rational_values(self) -> List[Fraction]:
        """Entries as Fractions; only valid when theta is rational."""
        if not self.theta.is_rational:
            raise ValueError("standard sequence of an irrational eigenvalue has no rational values")
        return [u.coefficient(0) for u in self.entries]

    def residual(self, ia: IntersectionArray, i: int) -> Poly:
        """c_i u_{i-1} + a_i u_i + b_i u_{i+1} - theta u_i, reduced; zero for 1 <= i <= D-1."""
        u = self.entries
        x = Poly.x()
        expr = u[i - 1] * ia.c_at(i) + u[i] * ia.a_at(i) + u[i + 1] * ia.b_at(i) - x * u[i]
        return reduce_mod(expr, self.theta)


@dataclass(frozen=True)
class SpectrumOfGamma:
    """Distinct eigenvalues theta_0 > ... > theta_D with their multiplicities."""

    entries: Tuple[Tuple[AlgebraicNumber, int], ...]

    @property
    def thetas(self) -> List[AlgebraicNumber]:
        return [theta for theta, _ in self.entries]

    @property
    def multiplicities(self) -> List[int]:
        return [m for _, m in self.entries]

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def to_json(self):
        return [{"theta": theta.to_json(), "multiplicity": m} for theta, m in self.entries]


def intersection_charpoly(ia: IntersectionArray) -> Poly:
    """Characteristic polynomial of the tridiagonal intersection matrix (continuant recurrence)."""
    x = Poly.x()
    previous, current = Poly.constant(1), x - ia.a_at(0)
    for i in range(1, ia.diameter + 1):
        previous, current = current, (x - ia.a_at(i)) * current - previous * (ia.b_at(i - 1) * ia.c_at(i))
    return current


def standard_sequence(ia: IntersectionArray, theta: AlgebraicNumber) -> StandardSequence:
    """u_0 = 1, u_1 = theta/k, c_i u_{i-1} + a_i u_i + b_i u_{i+1} = theta u_i."""
    x = Poly.x()
    u = [Poly.constant(1), reduce_mod(x / ia.k, theta)]
    for i in range(1, ia.diameter):
        nxt = ((x - ia.a_at(i)) * u[i] - u[i - 1] * ia.c_at(i)) / ia.b_at(i)
        u.append(reduce_mod(nxt, theta))
    return StandardSequence(theta, tuple(u))


def norm_weight(ia: IntersectionArray, seq: StandardSequence) -> Poly:
    """sum_i k_i u_i^2, reduced modulo the minimal polynomial of theta."""
    total = Poly()
    for size, u in zip(ia.sizes, seq.entries):
        total = total + u * u * size
    return reduce_mod(total, seq.theta)


def multiplicity(ia: IntersectionArray, theta: AlgebraicNumber) -> int:
    """mult(theta) = n / sum_i k_i u_i^2, required to be a positive integer."""
    seq = standard_sequence(ia, theta)
    weight = norm_weight(ia, seq)
    value = evaluate_ratio(theta, Poly.constant(ia.n), weight)
    if not value.is_rational:
        raise NonIntegralMultiplicity(f"multiplicity of {theta} in {ia} is irrational")
    m = value.value
    if m.denominator != 1 or m <= 0:
        raise NonIntegralMultiplicity(
            f"multiplicity of {theta} in {ia} is {format_rational(m)}, not a positive integer"
        )
    return int(m)


def spectrum_of_gamma(ia: IntersectionArray) -> SpectrumOfGamma:
    """All D+1 eigenvalues with multiplicities; checks the multiplicity sum and the trace."""
    roots = sturm_isolate(intersection_charpoly(ia))
    if len(roots) != ia.diameter + 1:
        raise InvalidIntersectionArray(f"{ia} has {len(roots)} distinct eigenvalues, expected {ia.diameter + 1}")
    roots.reverse()
    entries = tuple((theta, multiplicity(ia, theta)) for theta in roots)
    spectrum = SpectrumOfGamma(entries)
    head, head_mult = entries[0]
    if not (head.is_rational and head.value == ia.k and head_mult == 1):
        raise InvalidIntersectionArray(f"largest eigenvalue of {ia} is not the simple valency")
    total = sum(spectrum.multiplicities)
    if total != ia.n:
        raise NonIntegralMultiplicity(f"multiplicities of {ia} sum to {total}, not n = {ia.n}")
    trace = exact_weighted_sum(ia, spectrum, lambda seq: Poly.x())
    if trace != 0:
        raise InvalidIntersectionArray(f"trace of the adjacency of {ia} would be {format_rational(trace)}")
    logger.debug("spectrum of %s: %s", ia, [(str(t), m) for t, m in entries])
    return spectrum


def exact_weighted_sum(
    ia: IntersectionArray,
    spectrum: SpectrumOfGamma,
    value_poly: Callable[[StandardSequence], Poly],
) -> Fraction:
    """sum_j mult(theta_j) * f(theta_j), exactly.

    ``value_poly`` maps a standard sequence to the polynomial f in theta.
    Irrational eigenvalues sharing a minimal polynomial g are split by
    multiplicity m via h_m = gcd(g, m * W - n), W = sum k_i u_i^2, and each
    part contributes m times the trace of f on Q[x]/(h_m).
    """
    total = Fraction(0)
    groups: Dict[Poly, List[Tuple[AlgebraicNumber, int]]] = {}
    for theta, m in spectrum.entries:
        if theta.is_rational:
            seq = standard_sequence(ia, theta)
            total += m * reduce_mod(value_poly(seq), theta).coefficient(0)
        else:
            groups.setdefault(theta.minimal_polynomial, []).append((theta, m))
    for g, members in groups.items():
        seq = standard_sequence(ia, members[0][0])
        weight = norm_weight(ia, seq)
        f = value_poly(seq) % g
        for m in sorted({m for _, m in members}):
            h = poly_gcd(g, weight * m - ia.n)
            count = sum(1 for _, mm in members if mm == m)
            if h.degree != count:
                raise InvalidIntersectionArray(f"inconsistent multiplicity split for {ia}")
            total += m * trace_mod(f % h, h)
    return total
