"""
Exact numerics: rationals, polynomials, real algebraic numbers and symmetric matrices.
"""

from .polynomial import Poly, poly_gcd, squarefree_decomposition, trace_mod
from .matrix import (
    Inertia,
    LDLCertificate,
    SymmetricRationalMatrix,
    charpoly,
    inertia,
    ldl_psd_certificate,
    verify_ldl_certificate,
)
from .algebraic import (
    AlgebraicNumber,
    compare,
    distinct_root_count,
    evaluate,
    evaluate_ratio,
    merge_equal,
    multisets_equal,
    reduce_mod,
    refine,
    sign_at,
    sturm_isolate,
)
from .rationals import format_rational, parse_rational, parse_rational_list, parse_rational_range

__all__ = [
    'Poly',
    'poly_gcd',
    'squarefree_decomposition',
    'trace_mod',
    'Inertia',
    'LDLCertificate',
    'SymmetricRationalMatrix',
    'charpoly',
    'inertia',
    'ldl_psd_certificate',
    'verify_ldl_certificate',
    'AlgebraicNumber',
    'compare',
    'distinct_root_count',
    'evaluate',
    'evaluate_ratio',
    'merge_equal',
    'multisets_equal',
    'reduce_mod',
    'refine',
    'sign_at',
    'sturm_isolate',
    'format_rational',
    'parse_rational',
    'parse_rational_list',
    'parse_rational_range',
]
