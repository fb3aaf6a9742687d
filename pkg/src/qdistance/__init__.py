"""
Generalized and q-distance spectra from intersection arrays.
"""

from .coefficients import CoefficientSequence, QCoefficients, q_coefficients, standard_coefficients
from .spectrum import (
    GeneralizedSpectrum,
    eigenvalue_polynomial,
    generalized_eigenvalue,
    generalized_spectrum,
    positive_count,
    row_sum,
)
from .classical_type import (
    ClassicalCertificate,
    ClassicalTypeReport,
    classical_b_type_certificate,
    detect_classical_type,
)
from .bounds import (
    KrrBound,
    QuadrangleEquality,
    bipartite_positive_root_check,
    classical_type_krr_q_bound,
    krr_bound,
    local_bound,
    quadrangle_equality_check,
)

__all__ = [
    'CoefficientSequence',
    'QCoefficients',
    'q_coefficients',
    'standard_coefficients',
    'GeneralizedSpectrum',
    'eigenvalue_polynomial',
    'generalized_eigenvalue',
    'generalized_spectrum',
    'positive_count',
    'row_sum',
    'ClassicalCertificate',
    'ClassicalTypeReport',
    'classical_b_type_certificate',
    'detect_classical_type',
    'KrrBound',
    'QuadrangleEquality',
    'bipartite_positive_root_check',
    'classical_type_krr_q_bound',
    'krr_bound',
    'local_bound',
    'quadrangle_equality_check',
]
