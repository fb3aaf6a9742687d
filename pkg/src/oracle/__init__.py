"""
Explicit-graph oracle: constructions, distances, exact matrices and certificates.
"""

from .graph import DistanceMatrix, Graph, all_pairs_distances, read_edge_list, write_edge_list
from .families import FAMILIES, FamilyDescriptor, build_family, clique_extension
from .matrices import (
    adjacency_matrix,
    clique_extension_spectrum_check,
    explicit_spectrum,
    generalized_distance_matrix,
    interlacing_holds,
    negative_type_inequality,
    negative_type_test_vectors,
    q_distance_matrix,
    semimetric_check,
)
from .regularity import contains_induced_krr, verify_distance_regular
from .local import local_graph, local_interlacing_check, local_min_eigenvalue_bound_check
from .witness import (
    NegativeTypeWitness,
    approximate_witness_vectors,
    negative_type_witness,
    standard_representation_gram,
)

__all__ = [
    'DistanceMatrix',
    'Graph',
    'all_pairs_distances',
    'read_edge_list',
    'write_edge_list',
    'FAMILIES',
    'FamilyDescriptor',
    'build_family',
    'clique_extension',
    'adjacency_matrix',
    'clique_extension_spectrum_check',
    'explicit_spectrum',
    'generalized_distance_matrix',
    'interlacing_holds',
    'negative_type_inequality',
    'negative_type_test_vectors',
    'q_distance_matrix',
    'semimetric_check',
    'contains_induced_krr',
    'verify_distance_regular',
    'local_graph',
    'local_interlacing_check',
    'local_min_eigenvalue_bound_check',
    'NegativeTypeWitness',
    'approximate_witness_vectors',
    'negative_type_witness',
    'standard_representation_gram',
]
