"""
Real algebraic numbers: Sturm sequences, root isolation, refinement and exact signs.

An AlgebraicNumber is a square-free primitive integer polynomial together with a
rational interval holding exactly one of its real roots. Rational values always
use a degree-1 polynomial and a point interval.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering
from math import ceil, floor
from typing import List, Optional, Sequence, Tuple, Union

from .polynomial import Poly, multiplication_matrix, poly_gcd
from .matrix import charpoly_rows

logger = logging.getLogger(__name__)


# Sturm sequences

def _positive_normalize(p: Poly) -> Poly:
    """Clear denominators and content using a positive factor only (signs are kept)."""
    if p.is_zero():
        return p
    primitive = p.primitive()
    return primitive if (primitive.lead > 0) == (p.lead > 0) else -primitive


def sturm_sequence(p: Poly) -> List[Poly]:
    seq = [_positive_normalize(p), _positive_normalize(p.derivative())]
    while not seq[-1].is_zero():
        seq.append(_positive_normalize(-(seq[-2] % seq[-1])))
    return seq[:-1]


def _sign(value: Fraction) -> int:
    return (value > 0) - (value < 0)


def sign_changes(seq: Sequence[Poly], x: Optional[Fraction] = None, at_infinity: int = 0) -> int:
    """Sign changes of a Sturm sequence at x, or at +oo / -oo when at_infinity is +1 / -1."""
    if at_infinity:
        signs = [p.sign_at_infinity(at_infinity > 0) for p in seq]
    else:
        signs = [p.sign_at(x) for p in seq]
    signs = [s for s in signs if s]
    return sum(1 for s, t in zip(signs, signs[1:]) if s != t)


def count_roots(seq: Sequence[Poly], lo: Fraction, hi: Fraction) -> int:
    """Number of distinct real roots in the half-open interval (lo, hi]."""
    if hi <= lo:
        return 0
    return sign_changes(seq, lo) - sign_changes(seq, hi)


def count_roots_closed(seq: Sequence[Poly], lo: Fraction, hi: Fraction) -> int:
    extra = 1 if seq[0].sign_at(lo) == 0 else 0
    return count_roots(seq, lo, hi) + extra


def distinct_root_count(p: Poly) -> int:
    """Number of distinct real roots of p (Sturm over the whole line)."""
    if p.is_zero():
        raise ValueError("distinct_root_count of the zero polynomial")
    sqf = p.squarefree_part()
    if sqf.degree <= 0:
        return 0
    seq = sturm_sequence(sqf)
    return sign_changes(seq, at_infinity=-1) - sign_changes(seq, at_infinity=1)


def root_bound(p: Poly) -> Fraction:
    """Cauchy bound; every real root lies strictly inside (-B, B)."""
    lead = abs(p.lead)
    return 1 + max((abs(c) / lead for c in p.coeffs[:-1]), default=Fraction(0))


# Algebraic numbers

@total_ordering
@dataclass(frozen=True, eq=False)
class AlgebraicNumber:
    """A real root of ``minimal_polynomial`` isolated in [lo, hi]."""

    minimal_polynomial: Poly
    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        if self.lo > self.hi:
            raise ValueError(f"empty isolating interval [{self.lo}, {self.hi}]")
        if self.lo == self.hi and self.minimal_polynomial.sign_at(self.lo) != 0:
            raise ValueError(f"{self.lo} is not a root of {self.minimal_polynomial}")

    @classmethod
    def rational(cls, value: Union[int, Fraction]) -> "AlgebraicNumber":
        value = Fraction(value)
        return cls(Poly.linear_root(value), value, value)

    @property
    def is_rational(self) -> bool:
        return self.minimal_polynomial.degree == 1

    @property
    def value(self) -> Fraction:
        """Exact value of a rational algebraic number."""
        if not self.is_rational:
            raise ValueError(f"{self} is irrational")
        p = self.minimal_polynomial
        return -p.coeffs[0] / p.coeffs[1]

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    def refine(self, width: Fraction) -> "AlgebraicNumber":
        return refine(self, width)

    def sign(self) -> int:
        return sign_at(self, Poly.x())

    def approx(self, width: Fraction = Fraction(1, 10**12)) -> float:
        if self.is_rational:
            return float(self.value)
        tight = refine(self, width)
        return float((tight.lo + tight.hi) / 2)

    def __float__(self) -> float:
        return self.approx()

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = AlgebraicNumber.rational(other)
        if not isinstance(other, AlgebraicNumber):
            return NotImplemented
        return compare(self, other) == 0

    def __lt__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = AlgebraicNumber.rational(other)
        if not isinstance(other, AlgebraicNumber):
            return NotImplemented
        return compare(self, other) < 0

    __hash__ = None

    def validate(self) -> bool:
        """Check the isolation invariant exactly (one Sturm root in the interval)."""
        if self.lo == self.hi:
            return self.minimal_polynomial.sign_at(self.lo) == 0
        seq = sturm_sequence(self.minimal_polynomial)
        return count_roots_closed(seq, self.lo, self.hi) == 1

    def to_json(self):
        if self.is_rational:
            value = self.value
            return str(value.numerator) if value.denominator == 1 else f"{value.numerator}/{value.denominator}"
        return {
            "minimal_polynomial": self.minimal_polynomial.to_int_list(),
            "interval": [_fmt(self.lo), _fmt(self.hi)],
        }

    @classmethod
    def from_json(cls, data) -> "AlgebraicNumber":
        if isinstance(data, str):
            return cls.rational(Fraction(data))
        lo, hi = (Fraction(v) for v in data["interval"])
        return cls(Poly(data["minimal_polynomial"]), lo, hi)

    def __str__(self) -> str:
        if self.is_rational:
            return _fmt(self.value)
        return f"root of {self.minimal_polynomial} in [{_fmt(self.lo)}, {_fmt(self.hi)}]"

    def __repr__(self) -> str:
        return f"AlgebraicNumber({self})"


def _fmt(value: Fraction) -> str:
    return str(value.numerator) if value.denominator == 1 else f"{value.numerator}/{value.denominator}"


# Isolation

def _isolate_intervals(p: Poly) -> List[Tuple[Fraction, Fraction]]:
    """Disjoint intervals, one per real root of square-free p; point intervals for exact hits."""
    seq = sturm_sequence(p)
    bound = root_bound(p)
    found: List[Tuple[Fraction, Fraction]] = []
    stack = [(-bound, bound, count_roots(seq, -bound, bound))]
    while stack:
        lo, hi, count = stack.pop()
        if count == 0:
            continue
        if count == 1:
            found.append((hi, hi) if p.sign_at(hi) == 0 else (lo, hi))
            continue
        mid = (lo + hi) / 2
        if p.sign_at(mid) == 0:
            found.append((mid, mid))
            left = _clear_endpoint(seq, mid, lo, towards_lo=True)
            right = _clear_endpoint(seq, mid, hi, towards_lo=False)
            stack.append((lo, left, count_roots(seq, lo, left)))
            stack.append((right, hi, count_roots(seq, right, hi)))
        else:
            stack.append((lo, mid, count_roots(seq, lo, mid)))
            stack.append((mid, hi, count_roots(seq, mid, hi)))
    return sorted(found)


def _clear_endpoint(seq: Sequence[Poly], root: Fraction, limit: Fraction, towards_lo: bool) -> Fraction:
    """A non-root point between root and limit with no root strictly between it and root."""
    delta = abs(limit - root) / 2
    while True:
        point = root - delta if towards_lo else root + delta
        lo, hi = (point, root) if towards_lo else (root, point)
        inside = count_roots(seq, lo, hi) - (1 if towards_lo else 0)
        if seq[0].sign_at(point) != 0 and inside == 0:
            return point
        delta /= 2


def _bisect_once(p: Poly, lo: Fraction, hi: Fraction) -> Tuple[Fraction, Fraction]:
    mid = (lo + hi) / 2
    s_mid = p.sign_at(mid)
    if s_mid == 0:
        return mid, mid
    if p.sign_at(lo) * s_mid < 0:
        return lo, mid
    return mid, hi


def sturm_isolate(p: Poly) -> List[AlgebraicNumber]:
    """One AlgebraicNumber per distinct real root of p, sorted ascending.

    Rational roots are split off and get degree-1 polynomials; the remaining
    roots share the square-free primitive part with the rational roots removed.
    """
    if p.is_zero():
        raise ValueError("sturm_isolate of the zero polynomial")
    sqf = p.squarefree_part()
    if sqf.degree <= 0:
        return []
    lead = int(sqf.lead)
    rational_roots: List[Fraction] = []
    irrational: List[Tuple[Fraction, Fraction]] = []
    for lo, hi in _isolate_intervals(sqf):
        if lo == hi:
            rational_roots.append(lo)
            continue
        # a rational root of the primitive polynomial has the form P / lead
        while (hi - lo) * lead >= 1:
            lo, hi = _bisect_once(sqf, lo, hi)
            if lo == hi:
                break
        if lo == hi:
            rational_roots.append(lo)
            continue
        hit = None
        for num in range(ceil(lo * lead), floor(hi * lead) + 1):
            candidate = Fraction(num, lead)
            if sqf.sign_at(candidate) == 0:
                hit = candidate
                break
        if hit is not None:
            rational_roots.append(hit)
        else:
            irrational.append((lo, hi))
    result = [AlgebraicNumber.rational(r) for r in rational_roots]
    if irrational:
        remaining = sqf
        for r in rational_roots:
            remaining = remaining // Poly([-r, 1])
        remaining = remaining.primitive()
        result.extend(AlgebraicNumber(remaining, lo, hi) for lo, hi in irrational)
    result.sort(key=lambda a: (a.lo, a.hi))
    logger.debug("isolated %d real roots of degree-%d polynomial", len(result), p.degree)
    return result


def refine(a: AlgebraicNumber, width: Fraction) -> AlgebraicNumber:
    """Bisect the isolating interval until it is at most ``width`` wide."""
    width = Fraction(width)
    if width <= 0:
        raise ValueError("refine width must be positive")
    if a.lo == a.hi or a.hi - a.lo <= width:
        return a
    p = a.minimal_polynomial
    lo, hi = a.lo, a.hi
    while hi - lo > width:
        lo, hi = _bisect_once(p, lo, hi)
        if lo == hi:
            return AlgebraicNumber.rational(lo)
    return AlgebraicNumber(p, lo, hi)


# Exact signs and arithmetic in Q(a)

def reduce_mod(f: Poly, a: AlgebraicNumber) -> Poly:
    """f reduced modulo the minimal polynomial of a (a constant when a is rational)."""
    if a.is_rational:
        return Poly.constant(f(a.value))
    return f % a.minimal_polynomial


def sign_at(a: AlgebraicNumber, f: Poly) -> int:
    """Exact sign of f(a)."""
    if a.is_rational:
        return _sign(Fraction(f(a.value)))
    g = a.minimal_polynomial
    r = f % g
    if r.is_zero():
        return 0
    if r.is_constant():
        return _sign(r.constant_value())
    common = poly_gcd(r, g)
    if common.degree >= 1 and count_roots_closed(sturm_sequence(common), a.lo, a.hi) == 1:
        return 0
    current = a
    while True:
        lo, hi = r.evaluate_interval(current.lo, current.hi)
        if lo > 0:
            return 1
        if hi < 0:
            return -1
        current = refine(current, current.width / 2)
        if current.is_rational:
            return _sign(Fraction(r(current.value)))


def compare(a: AlgebraicNumber, b: AlgebraicNumber) -> int:
    """Sign of a - b."""
    if a.is_rational and b.is_rational:
        return _sign(a.value - b.value)
    if a.is_rational:
        return -sign_at(b, Poly([-a.value, 1]))
    if b.is_rational:
        return sign_at(a, Poly([-b.value, 1]))
    common = poly_gcd(a.minimal_polynomial, b.minimal_polynomial)
    if common.degree >= 1:
        lo, hi = max(a.lo, b.lo), min(a.hi, b.hi)
        if lo <= hi and count_roots_closed(sturm_sequence(common), lo, hi) >= 1:
            return 0
    while True:
        if a.hi < b.lo:
            return -1
        if b.hi < a.lo:
            return 1
        a = refine(a, a.width / 2)
        b = refine(b, b.width / 2)
        if a.is_rational or b.is_rational:
            return compare(a, b)


def poly_inverse_mod(f: Poly, modulus: Poly) -> Poly:
    """g with f*g = 1 modulo a modulus coprime to f (extended Euclid)."""
    r0, r1 = modulus, f % modulus
    s0, s1 = Poly(), Poly.constant(1)
    while not r1.is_zero():
        quotient, remainder = divmod(r0, r1)
        r0, r1 = r1, remainder
        s0, s1 = s1, s0 - quotient * s1
    if r0.degree != 0:
        raise ZeroDivisionError("polynomial is not invertible modulo the given modulus")
    return (s0 / r0.constant_value()) % modulus


def field_inverse(a: AlgebraicNumber, f: Poly) -> Tuple[AlgebraicNumber, Poly]:
    """Inverse of f(a) in Q(a).

    The minimal polynomial is first stripped of the factor it shares with f, so
    the inverse exists even when the stored polynomial is reducible. Returns the
    (possibly re-based) algebraic number together with the inverse polynomial.
    """
    if sign_at(a, f) == 0:
        raise ZeroDivisionError("f(a) = 0 has no inverse")
    if a.is_rational:
        return a, Poly.constant(1 / Fraction(f(a.value)))
    g = a.minimal_polynomial
    r = f % g
    common = poly_gcd(r, g)
    if common.degree >= 1:
        g = (g // common).primitive()
        a = AlgebraicNumber(g, a.lo, a.hi)
        r = r % g
    return a, poly_inverse_mod(r, g)


def evaluate(a: AlgebraicNumber, f: Poly) -> AlgebraicNumber:
    """The algebraic number f(a).

    Its defining polynomial comes from the characteristic polynomial of
    multiplication by f in Q[x]/(minimal polynomial of a); the right root is
    picked by interval evaluation of f on refinements of a.
    """
    r = reduce_mod(f, a)
    if r.is_constant():
        return AlgebraicNumber.rational(r.coefficient(0))
    norm = Poly(charpoly_rows(multiplication_matrix(r, a.minimal_polynomial)))
    candidates = sturm_isolate(norm)
    current = a
    while True:
        lo, hi = r.evaluate_interval(current.lo, current.hi)
        hits = [c for c in candidates if c.lo <= hi and lo <= c.hi]
        if len(hits) == 1:
            return hits[0]
        current = refine(current, current.width / 2)
        if current.is_rational:
            return AlgebraicNumber.rational(r(current.value))
        candidates = [c if c.is_rational else refine(c, c.width / 2) for c in candidates]


def evaluate_ratio(a: AlgebraicNumber, numerator: Poly, denominator: Poly) -> AlgebraicNumber:
    """The algebraic number numerator(a) / denominator(a)."""
    base, inverse = field_inverse(a, denominator)
    if base.is_rational:
        return AlgebraicNumber.rational(Fraction(numerator(base.value)) * inverse.coefficient(0))
    return evaluate(base, (numerator * inverse) % base.minimal_polynomial)


def merge_equal(values: Sequence[Tuple[AlgebraicNumber, int]]) -> List[Tuple[AlgebraicNumber, int]]:
    """Merge equal algebraic numbers, summing their multiplicities (descending order)."""
    merged: List[List] = []
    for value, mult in values:
        for entry in merged:
            if compare(entry[0], value) == 0:
                entry[1] += mult
                break
        else:
            merged.append([value, mult])
    merged.sort(key=_SortKey, reverse=True)
    return [(v, m) for v, m in merged]


class _SortKey:
    __slots__ = ("value",)

    def __init__(self, entry):
        self.value = entry[0]

    def __lt__(self, other: "_SortKey") -> bool:
        return compare(self.value, other.value) < 0


def multisets_equal(
    left: Sequence[Tuple[AlgebraicNumber, int]],
    right: Sequence[Tuple[AlgebraicNumber, int]],
) -> bool:
    """Exact equality of two (value, multiplicity) multisets."""
    a, b = merge_equal(left), merge_equal(right)
    if len(a) != len(b):
        return False
    return all(ma == mb and compare(va, vb) == 0 for (va, ma), (vb, mb) in zip(a, b))
