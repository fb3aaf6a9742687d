"""
Standard graph families with canonical vertex labels.

Words are listed lexicographically and subsets in sorted combination order, so
every construction is deterministic.
"""

from dataclasses import dataclass
from itertools import combinations, product
from typing import Callable, Dict, Tuple

import networkx as nx

from src.utils.errors import InvalidFamilyParameters

from .graph import Graph


@dataclass(frozen=True)
class FamilyDescriptor:
    """A family name and its integer parameters, written "name:p1,p2"."""

    family: str
    params: Tuple[int, ...] = ()

    @classmethod
    def parse(cls, text: str) -> "FamilyDescriptor":
        name, _, rest = text.strip().partition(":")
        name = name.strip().lower().replace("-", "_")
        try:
            params = tuple(int(p) for p in rest.split(",") if p.strip())
        except ValueError as exc:
            raise InvalidFamilyParameters(f"family parameters must be integers: {text!r}") from exc
        return cls(name, params)

    def __str__(self) -> str:
        if not self.params:
            return self.family
        return f"{self.family}:{','.join(str(p) for p in self.params)}"


def _words(length: int, alphabet: int):
    return list(product(range(alphabet), repeat=length))


def _hamming_distance(u, v) -> int:
    return sum(1 for a, b in zip(u, v) if a != b)


def _from_labels(labels, adjacent: Callable, name: str) -> Graph:
    edges = [(i, j) for i, j in combinations(range(len(labels)), 2) if adjacent(labels[i], labels[j])]
    return Graph.from_edges(len(labels), edges, name)


def hamming(D: int, q: int) -> Graph:
    if D < 1 or q < 2:
        raise InvalidFamilyParameters(f"hamming needs D >= 1 and n >= 2, got ({D}, {q})")
    return _from_labels(_words(D, q), lambda u, v: _hamming_distance(u, v) == 1, f"hamming:{D},{q}")


def hypercube(D: int) -> Graph:
    if D < 1:
        raise InvalidFamilyParameters(f"hypercube needs D >= 1, got {D}")
    g = hamming(D, 2)
    return Graph(g.n, g.adjacency, f"hypercube:{D}")


def johnson(n: int, k: int) -> Graph:
    if not 1 <= k < n:
        raise InvalidFamilyParameters(f"johnson needs 1 <= k < n, got ({n}, {k})")
    subsets = [frozenset(s) for s in combinations(range(n), k)]
    return _from_labels(subsets, lambda a, b: len(a & b) == k - 1, f"johnson:{n},{k}")


def halved_cube(D: int) -> Graph:
    if D < 2:
        raise InvalidFamilyParameters(f"halved_cube needs D >= 2, got {D}")
    even = [w for w in _words(D, 2) if sum(w) % 2 == 0]
    return _from_labels(even, lambda u, v: _hamming_distance(u, v) == 2, f"halved_cube:{D}")


def cycle(n: int) -> Graph:
    if n < 3:
        raise InvalidFamilyParameters(f"cycle needs n >= 3, got {n}")
    return Graph.from_networkx(nx.cycle_graph(n), f"cycle:{n}")


def path(n: int) -> Graph:
    if n < 2:
        raise InvalidFamilyParameters(f"path needs n >= 2, got {n}")
    return Graph.from_networkx(nx.path_graph(n), f"path:{n}")


def complete(n: int) -> Graph:
    if n < 2:
        raise InvalidFamilyParameters(f"complete needs n >= 2, got {n}")
    return Graph.from_networkx(nx.complete_graph(n), f"complete:{n}")


def complete_bipartite(r: int, s: int) -> Graph:
    if r < 1 or s < 1:
        raise InvalidFamilyParameters(f"complete_bipartite needs r, s >= 1, got ({r}, {s})")
    return Graph.from_networkx(nx.complete_bipartite_graph(r, s), f"complete_bipartite:{r},{s}")


def petersen() -> Graph:
    return Graph.from_networkx(nx.petersen_graph(), "petersen")


def icosahedron() -> Graph:
    return Graph.from_networkx(nx.icosahedral_graph(), "icosahedron")


FAMILIES: Dict[str, Tuple[int, Callable[..., Graph]]] = {
    "hamming": (2, hamming),
    "johnson": (2, johnson),
    "hypercube": (1, hypercube),
    "halved_cube": (1, halved_cube),
    "cycle": (1, cycle),
    "path": (1, path),
    "complete": (1, complete),
    "complete_bipartite": (2, complete_bipartite),
    "petersen": (0, petersen),
    "icosahedron": (0, icosahedron),
}


def build_family(spec) -> Graph:
    """Build a graph from a FamilyDescriptor or its "name:p1,p2" text."""
    descriptor = spec if isinstance(spec, FamilyDescriptor) else FamilyDescriptor.parse(spec)
    if descriptor.family not in FAMILIES:
        raise InvalidFamilyParameters(
            f"unknown family {descriptor.family!r}; known: {', '.join(sorted(FAMILIES))}"
        )
    arity, builder = FAMILIES[descriptor.family]
    if len(descriptor.params) != arity:
        raise InvalidFamilyParameters(f"{descriptor.family} takes {arity} parameter(s), got {descriptor}")
    return builder(*descriptor.params)


def clique_extension(g: Graph, s: int) -> Graph:
    """Replace every vertex x by the clique {(x, 0), ..., (x, s-1)}; (x, t) is labelled x*s + t."""
    if s < 1:
        raise InvalidFamilyParameters(f"clique extension needs s >= 1, got {s}")
    product_graph = nx.strong_product(g.to_networkx(), nx.complete_graph(s))
    return Graph.from_networkx(product_graph, f"{g.name}^{s}" if g.name else "")
