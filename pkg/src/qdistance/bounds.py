"""
Bound checks derived from the standard sequence at the second largest eigenvalue.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Tuple

from src.drg.intersection_array import IntersectionArray
from src.drg.spectrum import spectrum_of_gamma, standard_sequence
from src.numerics.algebraic import AlgebraicNumber, sign_at
from src.numerics.rationals import format_rational
from src.utils.errors import PreconditionNotMet, ZeroQ

from .classical_type import detect_classical_type
from .coefficients import q_coefficients
from .spectrum import generalized_eigenvalue


@dataclass(frozen=True)
class KrrBound:
    """bound = b_1/(r-1) - 1 and whether u_0 + (r-1) u_2 >= r u_1 holds at theta_1."""

    r: int
    bound: Fraction
    inequality_holds: bool
    theta1: AlgebraicNumber

    def to_json(self):
        return {
            "r": self.r,
            "bound": format_rational(self.bound),
            "inequality_holds": self.inequality_holds,
            "theta1": self.theta1.to_json(),
        }


def krr_bound(ia: IntersectionArray, r: int) -> KrrBound:
    """A graph with an induced K_{r,r} satisfies the inequality; failure rules it out."""
    if r < 2:
        raise ValueError(f"r must be at least 2, got {r}")
    theta1 = spectrum_of_gamma(ia).thetas[1]
    seq = standard_sequence(ia, theta1)
    expr = seq[0] + seq[2] * (r - 1) - seq[1] * r
    holds = sign_at(theta1, expr) >= 0
    return KrrBound(r, ia.b[1] / (r - 1) - 1, holds, theta1)


def classical_type_krr_q_bound(q, r: int) -> bool:
    """An induced K_{r,r} forces q >= r - 1 for a theta_1 of classical q-type."""
    return Fraction(q) >= r - 1


def local_bound(q) -> Fraction:
    """-q - 1: lower bound on the smallest (q > 0) or second largest (q < 0) local eigenvalue."""
    q = Fraction(q)
    if q == 0:
        raise ZeroQ("q must be nonzero")
    return -q - 1


@dataclass(frozen=True)
class QuadrangleEquality:
    applies: bool
    holds: Optional[bool] = None
    q: Optional[Fraction] = None

    def to_json(self):
        return {
            "applies": self.applies,
            "holds": self.holds,
            "q": format_rational(self.q) if self.q is not None else None,
        }


def quadrangle_equality_check(ia: IntersectionArray) -> QuadrangleEquality:
    """When theta_1 = b_1 - 1: u_i = 1 - i (a_1 + 2)/k and theta_1 is of classical 1-type."""
    theta1 = spectrum_of_gamma(ia).thetas[1]
    if not (theta1.is_rational and theta1.value == ia.b[1] - 1):
        return QuadrangleEquality(False)
    u = standard_sequence(ia, theta1).rational_values()
    step = (ia.a_at(1) + 2) / ia.k
    linear = all(u[i] == 1 - i * step for i in range(ia.diameter + 1))
    report = detect_classical_type(ia, theta1)
    return QuadrangleEquality(True, linear and report.q == 1, report.q)


def bipartite_positive_root_check(ia: IntersectionArray, q) -> Tuple[Fraction, bool]:
    """Closed form sum (-1)^i k_i sigma_i of eta at theta = -k, and its agreement with the general formula."""
    if not ia.is_bipartite:
        raise PreconditionNotMet(f"{ia} is not bipartite")
    alpha = q_coefficients(q, ia.diameter).as_sequence()
    closed = sum(((-1) ** i * ia.sizes[i] * alpha[i] for i in range(ia.diameter + 1)), Fraction(0))
    eta = generalized_eigenvalue(ia, alpha, AlgebraicNumber.rational(-ia.k))
    return closed, eta == closed
