"""
Exact dense symmetric matrices over the rationals.

Characteristic polynomials come from sympy's DomainMatrix over QQ. Inertia uses
symmetric congruence elimination with exact Fractions, pivoting on a 2x2
hyperbolic block when the remaining diagonal is zero; the PSD certificate is an
LDL^T with diagonal pivoting.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from .polynomial import Poly, to_fraction, to_qq

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Inertia:
    """Counts of positive, zero and negative eigenvalues."""

    n_pos: int
    n_zero: int
    n_neg: int

    @property
    def order(self) -> int:
        return self.n_pos + self.n_zero + self.n_neg

    def to_dict(self):
        return {"n_pos": self.n_pos, "n_zero": self.n_zero, "n_neg": self.n_neg}


@dataclass(frozen=True)
class SymmetricRationalMatrix:
    """Dense symmetric matrix with Fraction entries."""

    order: int
    entries: Tuple[Tuple[Fraction, ...], ...]

    def __post_init__(self):
        if self.order <= 0 or len(self.entries) != self.order:
            raise ValueError(f"matrix must have {self.order} rows")
        for i, row in enumerate(self.entries):
            if len(row) != self.order:
                raise ValueError(f"row {i} has length {len(row)}, expected {self.order}")
            for j in range(i):
                if row[j] != self.entries[j][i]:
                    raise ValueError(f"matrix is not symmetric at ({i}, {j})")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> "SymmetricRationalMatrix":
        entries = tuple(tuple(Fraction(v) for v in row) for row in rows)
        return cls(len(entries), entries)

    @classmethod
    def diagonal(cls, values: Sequence) -> "SymmetricRationalMatrix":
        n = len(values)
        return cls.from_rows([[values[i] if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def identity(cls, n: int) -> "SymmetricRationalMatrix":
        return cls.diagonal([1] * n)

    @classmethod
    def ones(cls, n: int) -> "SymmetricRationalMatrix":
        return cls.from_rows([[1] * n for _ in range(n)])

    def __getitem__(self, index: Tuple[int, int]) -> Fraction:
        i, j = index
        return self.entries[i][j]

    def rows(self) -> List[List[Fraction]]:
        return [list(row) for row in self.entries]

    def __add__(self, other: "SymmetricRationalMatrix") -> "SymmetricRationalMatrix":
        return SymmetricRationalMatrix.from_rows(
            [[a + b for a, b in zip(r, s)] for r, s in zip(self.entries, other.entries)]
        )

    def __sub__(self, other: "SymmetricRationalMatrix") -> "SymmetricRationalMatrix":
        return SymmetricRationalMatrix.from_rows(
            [[a - b for a, b in zip(r, s)] for r, s in zip(self.entries, other.entries)]
        )

    def scale(self, factor) -> "SymmetricRationalMatrix":
        factor = Fraction(factor)
        return SymmetricRationalMatrix.from_rows([[v * factor for v in row] for row in self.entries])

    def shift(self, value) -> "SymmetricRationalMatrix":
        """M + value * I."""
        value = Fraction(value)
        return SymmetricRationalMatrix.from_rows(
            [[v + (value if i == j else 0) for j, v in enumerate(row)] for i, row in enumerate(self.entries)]
        )

    def principal_submatrix(self, indices: Sequence[int]) -> "SymmetricRationalMatrix":
        return SymmetricRationalMatrix.from_rows([[self.entries[i][j] for j in indices] for i in indices])

    def row_sums(self) -> List[Fraction]:
        return [sum(row, Fraction(0)) for row in self.entries]

    def constant_row_sum(self) -> Optional[Fraction]:
        sums = self.row_sums()
        return sums[0] if all(s == sums[0] for s in sums) else None

    def is_zero(self) -> bool:
        return all(v == 0 for row in self.entries for v in row)

    def to_json(self):
        return [[_fmt(v) for v in row] for row in self.entries]


def _fmt(value: Fraction) -> str:
    return str(value.numerator) if value.denominator == 1 else f"{value.numerator}/{value.denominator}"


# Characteristic polynomials

def charpoly_rows(rows: Sequence[Sequence]) -> List[Fraction]:
    """Coefficients (lowest degree first) of det(xI - A) for any square rational matrix."""
    n = len(rows)
    if n == 0:
        return [Fraction(1)]
    domain_rows = [[to_qq(v) for v in row] for row in rows]
    highest_first = DomainMatrix(domain_rows, (n, n), QQ).charpoly()
    return [to_fraction(QQ.to_sympy(c)) for c in reversed(highest_first)]


def charpoly(matrix: SymmetricRationalMatrix) -> Poly:
    """det(xI - M), exactly."""
    logger.debug("charpoly of order %d", matrix.order)
    return Poly(charpoly_rows(matrix.entries))


# Congruence elimination

def inertia(matrix: SymmetricRationalMatrix) -> Inertia:
    """Sylvester inertia by symmetric elimination with symmetric pivoting."""
    work = [list(row) for row in matrix.entries]
    active = list(range(matrix.order))
    n_pos = n_neg = n_zero = 0
    while active:
        best = max(active, key=lambda i: abs(work[i][i]))
        pivot = work[best][best]
        if pivot != 0:
            if pivot > 0:
                n_pos += 1
            else:
                n_neg += 1
            active.remove(best)
            pivot_row = work[best]
            for x in active:
                factor = work[x][best] / pivot
                if factor:
                    row = work[x]
                    for y in active:
                        row[y] -= factor * pivot_row[y]
            continue
        pair = next(((i, j) for i in active for j in active if i < j and work[i][j] != 0), None)
        if pair is None:
            n_zero += len(active)
            break
        i, j = pair
        off = work[i][j]
        n_pos += 1
        n_neg += 1
        active.remove(i)
        active.remove(j)
        for x in active:
            xi, xj = work[x][i], work[x][j]
            if not xi and not xj:
                continue
            row = work[x]
            for y in active:
                row[y] -= (xi * work[j][y] + xj * work[i][y]) / off
    return Inertia(n_pos, n_zero, n_neg)


@dataclass(frozen=True)
class LDLCertificate:
    """P M P^T = L diag(D) L^T with L unit lower-triangular and D >= 0."""

    permutation: Tuple[int, ...]
    lower: Tuple[Tuple[Fraction, ...], ...]
    diagonal: Tuple[Fraction, ...]

    def to_json(self):
        return {
            "permutation": list(self.permutation),
            "lower": [[_fmt(v) for v in row] for row in self.lower],
            "diagonal": [_fmt(v) for v in self.diagonal],
        }


def ldl_psd_certificate(matrix: SymmetricRationalMatrix) -> Optional[LDLCertificate]:
    """Exact LDL^T with diagonal pivoting, or None when the matrix is not PSD."""
    n = matrix.order
    work = [list(row) for row in matrix.entries]
    active = list(range(n))
    order: List[int] = []
    columns = {}
    diagonal: List[Fraction] = []
    while active:
        best = max(active, key=lambda i: work[i][i])
        pivot = work[best][best]
        if pivot < 0:
            return None
        if pivot == 0:
            if any(work[x][y] != 0 for x in active for y in active):
                return None
            for x in active:
                order.append(x)
                columns[x] = {}
                diagonal.append(Fraction(0))
            break
        active.remove(best)
        order.append(best)
        diagonal.append(pivot)
        columns[best] = {x: work[x][best] / pivot for x in active}
        pivot_row = work[best]
        for x in active:
            factor = columns[best][x]
            if factor:
                row = work[x]
                for y in active:
                    row[y] -= factor * pivot_row[y]
    position = {vertex: k for k, vertex in enumerate(order)}
    lower = [[Fraction(0)] * n for _ in range(n)]
    for k, vertex in enumerate(order):
        lower[k][k] = Fraction(1)
        for x, value in columns[vertex].items():
            lower[position[x]][k] = value
    return LDLCertificate(tuple(order), tuple(tuple(r) for r in lower), tuple(diagonal))


def verify_ldl_certificate(matrix: SymmetricRationalMatrix, cert: LDLCertificate) -> bool:
    """Recompute L D L^T and compare with the permuted matrix exactly."""
    n = matrix.order
    if any(d < 0 for d in cert.diagonal):
        return False
    lower = cert.lower
    for i in range(n):
        if lower[i][i] != 1 or any(lower[i][j] != 0 for j in range(i + 1, n)):
            return False
    perm = cert.permutation
    for i in range(n):
        for j in range(i + 1):
            value = sum(
                (lower[i][k] * cert.diagonal[k] * lower[j][k] for k in range(j + 1)),
                Fraction(0),
            )
            if value != matrix.entries[perm[i]][perm[j]]:
                return False
    return True
