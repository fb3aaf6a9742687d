"""
Univariate polynomials with exact rational coefficients, on top of ``sympy.Poly``.

``Poly`` wraps a ``sympy.Poly`` in QQ[x]; division, gcd, square-free parts and
decompositions, derivatives and evaluation are sympy's. Coefficients are
exposed as Fractions, lowest degree first and trimmed, so the zero polynomial
has no coefficients and degree -1. Integer polynomials (the IntPolynomial of
the algebraic layer) are Poly values whose coefficients all have denominator
1; ``primitive()`` produces them.
"""

from fractions import Fraction
from typing import Iterable, List, Tuple, Union

import sympy
from sympy import QQ

Scalar = Union[int, Fraction]

X = sympy.Symbol("x")


def to_qq(value: Scalar):
    """A Python rational as an element of sympy's QQ."""
    value = Fraction(value)
    return QQ(value.numerator, value.denominator)


def to_fraction(value) -> Fraction:
    """A sympy Rational as a Fraction."""
    return Fraction(int(value.p), int(value.q))


class Poly:
    """Immutable polynomial over the rationals."""

    __slots__ = ("rep", "_coeffs")

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        values = [to_qq(c) for c in coeffs]
        values.reverse()
        self._assign(sympy.Poly.from_list(values or [QQ.zero], X, domain=QQ))

    def _assign(self, rep: sympy.Poly):
        object.__setattr__(self, "rep", rep)
        object.__setattr__(self, "_coeffs", None)

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    def __reduce__(self):
        return Poly, (self.coeffs,)

    # construction

    @classmethod
    def _wrap(cls, rep: sympy.Poly) -> "Poly":
        poly = object.__new__(cls)
        poly._assign(rep)
        return poly

    @classmethod
    def constant(cls, value: Scalar) -> "Poly":
        return cls([value])

    @classmethod
    def x(cls) -> "Poly":
        return cls([0, 1])

    @classmethod
    def linear_root(cls, root: Scalar) -> "Poly":
        """The primitive integer polynomial q*x - p of the rational root p/q."""
        root = Fraction(root)
        return cls([-root.numerator, root.denominator])

    @classmethod
    def from_roots(cls, roots: Iterable[Scalar]) -> "Poly":
        result = cls.constant(1)
        for r in roots:
            result = result * cls([-Fraction(r), 1])
        return result

    # basic properties

    @property
    def coeffs(self) -> Tuple[Fraction, ...]:
        if self._coeffs is None:
            values = () if self.rep.is_zero else tuple(to_fraction(c) for c in reversed(self.rep.all_coeffs()))
            object.__setattr__(self, "_coeffs", values)
        return self._coeffs

    @property
    def degree(self) -> int:
        return -1 if self.rep.is_zero else int(self.rep.degree())

    def is_zero(self) -> bool:
        return self.rep.is_zero

    def is_constant(self) -> bool:
        return self.degree <= 0

    @property
    def lead(self) -> Fraction:
        return to_fraction(self.rep.LC())

    def coefficient(self, i: int) -> Fraction:
        coeffs = self.coeffs
        return coeffs[i] if 0 <= i < len(coeffs) else Fraction(0)

    def constant_value(self) -> Fraction:
        if self.degree > 0:
            raise ValueError(f"polynomial {self} is not constant")
        return self.coefficient(0)

    # arithmetic

    @staticmethod
    def _coerce(other) -> "Poly":
        if isinstance(other, Poly):
            return other
        if isinstance(other, (int, Fraction)):
            return Poly.constant(other)
        return NotImplemented

    def __add__(self, other) -> "Poly":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return Poly._wrap(self.rep + other.rep)

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly._wrap(-self.rep)

    def __sub__(self, other) -> "Poly":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return Poly._wrap(self.rep - other.rep)

    def __rsub__(self, other) -> "Poly":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other) -> "Poly":
        if isinstance(other, (int, Fraction)):
            return Poly._wrap(self.rep.mul_ground(to_qq(other)))
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return Poly._wrap(self.rep * other.rep)

    __rmul__ = __mul__

    def __truediv__(self, scalar: Scalar) -> "Poly":
        if Fraction(scalar) == 0:
            raise ZeroDivisionError("polynomial division by zero")
        return Poly._wrap(self.rep.quo_ground(to_qq(scalar)))

    def __pow__(self, exponent: int) -> "Poly":
        if exponent < 0:
            raise ValueError("negative exponent")
        return Poly._wrap(self.rep ** exponent)

    def __divmod__(self, divisor: "Poly") -> Tuple["Poly", "Poly"]:
        if divisor.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        quotient, remainder = self.rep.div(divisor.rep)
        return Poly._wrap(quotient), Poly._wrap(remainder)

    def __floordiv__(self, divisor: "Poly") -> "Poly":
        return divmod(self, divisor)[0]

    def __mod__(self, divisor: "Poly") -> "Poly":
        if divisor.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        return Poly._wrap(self.rep.rem(divisor.rep))

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is NotImplemented:
            return False
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    # evaluation

    def __call__(self, x: Scalar) -> Fraction:
        return to_fraction(self.rep.eval(to_qq(x)))

    def sign_at(self, x: Scalar) -> int:
        value = self(x)
        return (value > 0) - (value < 0)

    def sign_at_infinity(self, positive: bool = True) -> int:
        if self.is_zero():
            return 0
        s = 1 if self.lead > 0 else -1
        if not positive and self.degree % 2 == 1:
            s = -s
        return s

    def evaluate_interval(self, lo: Fraction, hi: Fraction) -> Tuple[Fraction, Fraction]:
        """An interval containing p([lo, hi]) by interval Horner evaluation."""
        rlo = rhi = Fraction(0)
        for c in reversed(self.coeffs):
            products = (rlo * lo, rlo * hi, rhi * lo, rhi * hi)
            rlo, rhi = min(products) + c, max(products) + c
        return rlo, rhi

    # calculus and structure

    def derivative(self) -> "Poly":
        return Poly._wrap(self.rep.diff(X))

    def monic(self) -> "Poly":
        if self.is_zero():
            return self
        return Poly._wrap(self.rep.monic())

    def primitive(self) -> "Poly":
        """Integer polynomial with content 1 and positive leading coefficient."""
        if self.is_zero():
            return self
        _, integral = self.rep.clear_denoms(convert=True)
        _, primitive = integral.primitive()
        if primitive.LC() < 0:
            primitive = -primitive
        return Poly._wrap(primitive.to_field())

    def squarefree_part(self) -> "Poly":
        """Square-free part, made primitive."""
        if self.degree <= 0:
            return Poly.constant(1) if not self.is_zero() else self
        return Poly._wrap(self.rep.sqf_part()).primitive()

    # rendering

    def __repr__(self) -> str:
        return f"Poly({[str(c) for c in self.coeffs]})"

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        terms = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if i == 0:
                body = str(mag)
            else:
                coeff = "" if mag == 1 else f"{mag}*"
                body = f"{coeff}x" if i == 1 else f"{coeff}x^{i}"
            terms.append((sign, body))
        first_sign, first_body = terms[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in terms[1:]:
            text += f" {sign} {body}"
        return text

    def to_int_list(self) -> List[int]:
        """Coefficients of the primitive integer form, lowest degree first."""
        return [int(c) for c in self.primitive().coeffs]


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic greatest common divisor."""
    return Poly._wrap(a.rep.gcd(b.rep)).monic()


def squarefree_decomposition(p: Poly) -> List[Tuple[Poly, int]]:
    """[(f_i, i)] with p = lead * prod f_i^i, f_i primitive, square-free and coprime."""
    if p.degree <= 0:
        return []
    _, factors = p.rep.sqf_list()
    return [
        (Poly._wrap(f).primitive(), k)
        for f, k in sorted(factors, key=lambda item: item[1])
        if f.degree() > 0
    ]


def multiplication_matrix(f: Poly, modulus: Poly) -> List[List[Fraction]]:
    """Matrix of y -> f*y on Q[x]/(modulus) in the basis 1, x, ..., x^(d-1) (columns are images)."""
    d = modulus.degree
    columns = []
    for j in range(d):
        image = (f * Poly([0] * j + [1])) % modulus
        columns.append([image.coefficient(i) for i in range(d)])
    return [[columns[j][i] for j in range(d)] for i in range(d)]


def trace_mod(f: Poly, modulus: Poly) -> Fraction:
    """Sum of f(r) over the roots r of a square-free modulus (trace of multiplication by f)."""
    matrix = multiplication_matrix(f, modulus)
    return sum((matrix[i][i] for i in range(len(matrix))), Fraction(0))
