"""
Local graphs and the local eigenvalue bounds implied by one positive q-distance eigenvalue.
"""

import logging
from typing import List, Optional

from src.numerics.matrix import SymmetricRationalMatrix, inertia
from src.qdistance.bounds import local_bound
from src.utils.errors import PreconditionNotMet

from .graph import DistanceMatrix, Graph, all_pairs_distances
from .matrices import adjacency_matrix, q_distance_matrix

logger = logging.getLogger(__name__)


def local_graph(g: Graph, x: int) -> Graph:
    """Subgraph induced on the neighbours of x."""
    return g.induced(g.adjacency[x], name=f"{g.name}:local({x})" if g.name else "")


def _require_one_positive(matrix: SymmetricRationalMatrix, g: Graph, q) -> None:
    n_pos = inertia(matrix).n_pos
    if n_pos != 1:
        raise PreconditionNotMet(f"q-distance matrix of {g} at q = {q} has {n_pos} positive eigenvalues, not 1")


def local_min_eigenvalue_bound_check(g: Graph, q, dm: Optional[DistanceMatrix] = None) -> bool:
    """For q > 0: A(local) + (q+1) I is PSD at every vertex.

    For q < 0: at most one local eigenvalue exceeds -q - 1.
    """
    dm = dm or all_pairs_distances(g)
    _require_one_positive(q_distance_matrix(dm, q), g, q)
    bound = local_bound(q)
    for x in range(g.n):
        delta = local_graph(g, x)
        if delta.n == 0:
            continue
        shifted = inertia(adjacency_matrix(delta).shift(-bound))
        ok = shifted.n_neg == 0 if q > 0 else shifted.n_pos <= 1
        if not ok:
            logger.debug("local bound fails at vertex %d of %s for q = %s", x, g, q)
            return False
    return True


def local_interlacing_check(g: Graph, q, dm: Optional[DistanceMatrix] = None) -> List[bool]:
    """Per vertex: the q-distance submatrix on the neighbourhood has at most one positive eigenvalue."""
    dm = dm or all_pairs_distances(g)
    matrix = q_distance_matrix(dm, q)
    _require_one_positive(matrix, g, q)
    return [inertia(matrix.principal_submatrix(g.adjacency[x])).n_pos <= 1 for x in range(g.n)]
