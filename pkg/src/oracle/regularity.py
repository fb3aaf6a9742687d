"""
Brute-force distance-regularity and induced K_{r,r} search.
"""

import logging
from typing import Dict, FrozenSet, Iterator, Optional, Tuple

from src.drg.intersection_array import IntersectionArray
from src.utils.errors import InvalidIntersectionArray, SizeLimitExceeded

from .graph import DistanceMatrix, Graph, all_pairs_distances

logger = logging.getLogger(__name__)


def verify_distance_regular(g: Graph, dm: Optional[DistanceMatrix] = None) -> Optional[IntersectionArray]:
    """The intersection array of g, or None when g is not distance-regular.

    For every ordered pair (x, y) at distance i the numbers of neighbours of x
    at distance i-1, i and i+1 from y must depend on i only. Complete graphs
    (diameter 1) also give None.
    """
    dm = dm or all_pairs_distances(g)
    D = dm.diameter
    if D < 2:
        return None
    seen: Dict[int, Tuple[int, int, int]] = {}
    for x in range(g.n):
        for y in range(g.n):
            i = dm[x, y]
            row_y = dm.entries[y]
            counts = [0, 0, 0]
            for z in g.adjacency[x]:
                delta = row_y[z] - i
                counts[delta + 1] += 1
            key = tuple(counts)
            if seen.setdefault(i, key) != key:
                logger.debug("%s is not distance-regular at distance %d", g, i)
                return None
    b = [seen[i][2] for i in range(D)]
    c = [seen[i][0] for i in range(1, D + 1)]
    try:
        return IntersectionArray(tuple(b), tuple(c))
    except InvalidIntersectionArray:
        return None


def _independent_sets(g: Graph, candidates, r: int, start: int = 0, chosen=()) -> Iterator[Tuple[int, ...]]:
    for index in range(start, len(candidates)):
        v = candidates[index]
        if any(g.adjacent(v, u) for u in chosen):
            continue
        picked = chosen + (v,)
        if len(picked) == r:
            yield picked
        else:
            yield from _independent_sets(g, candidates, r, index + 1, picked)


def contains_induced_krr(g: Graph, r: int, max_order: int = 64, max_r: int = 3) -> bool:
    """Exhaustive search for an induced K_{r,r}, pruned by common-neighbourhood size."""
    if r < 2:
        raise ValueError(f"r must be at least 2, got {r}")
    if g.n > max_order or r > max_r:
        raise SizeLimitExceeded(f"induced K_{{{r},{r}}} search limited to n <= {max_order}, r <= {max_r}")
    sets = g.neighbour_sets
    vertices = list(range(g.n))
    for left in _independent_sets(g, vertices, r):
        common: FrozenSet[int] = frozenset.intersection(*(sets[v] for v in left))
        if len(common) < r:
            continue
        for _ in _independent_sets(g, sorted(common), r):
            return True
    return False
