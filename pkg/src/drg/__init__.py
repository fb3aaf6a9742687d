"""
Distance-regular graph core: intersection arrays, classical parameters and spectra.
"""

from .intersection_array import IntersectionArray, subconstituents
from .classical import ClassicalParameters, classical_to_array, q_int
from .spectrum import (
    SpectrumOfGamma,
    StandardSequence,
    exact_weighted_sum,
    intersection_charpoly,
    multiplicity,
    norm_weight,
    spectrum_of_gamma,
    standard_sequence,
)

__all__ = [
    'IntersectionArray',
    'subconstituents',
    'ClassicalParameters',
    'classical_to_array',
    'q_int',
    'SpectrumOfGamma',
    'StandardSequence',
    'exact_weighted_sum',
    'intersection_charpoly',
    'multiplicity',
    'norm_weight',
    'spectrum_of_gamma',
    'standard_sequence',
]
