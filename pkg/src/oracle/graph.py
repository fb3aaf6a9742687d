"""
Explicit graphs and their distance matrices.

Graphs are stored as sorted neighbour lists on vertices 0..n-1 and converted to
networkx only for traversal.
"""

import logging
from dataclasses import dataclass
from functools import cached_property
from pathlib import Path
from typing import FrozenSet, Iterable, List, Sequence, Set, Tuple

import networkx as nx

from src.utils.errors import Disconnected, UsageError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on 0..n-1."""

    n: int
    adjacency: Tuple[Tuple[int, ...], ...]
    name: str = ""

    def __post_init__(self):
        if len(self.adjacency) != self.n:
            raise ValueError(f"adjacency has {len(self.adjacency)} rows for {self.n} vertices")
        for x, neighbours in enumerate(self.adjacency):
            if list(neighbours) != sorted(set(neighbours)):
                raise ValueError(f"neighbours of {x} must be sorted and distinct")
            for y in neighbours:
                if y == x:
                    raise ValueError(f"loop at vertex {x}")
                if not 0 <= y < self.n or x not in self.adjacency[y]:
                    raise ValueError(f"edge {x}-{y} is not symmetric")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Tuple[int, int]], name: str = "", connected: bool = True) -> "Graph":
        neighbours: List[Set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            neighbours[u].add(v)
            neighbours[v].add(u)
        graph = cls(n, tuple(tuple(sorted(s)) for s in neighbours), name)
        if connected and not graph.is_connected():
            raise Disconnected(f"graph {name or '<unnamed>'} is not connected")
        return graph

    @classmethod
    def from_networkx(cls, g: nx.Graph, name: str = "", connected: bool = True) -> "Graph":
        """Relabel nodes 0..n-1 in sorted node order."""
        relabelled = nx.convert_node_labels_to_integers(g, ordering="sorted")
        return cls.from_edges(relabelled.number_of_nodes(), relabelled.edges(), name, connected)

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(range(self.n))
        g.add_edges_from(self.edges())
        return g

    def edges(self) -> List[Tuple[int, int]]:
        return [(x, y) for x in range(self.n) for y in self.adjacency[x] if x < y]

    @property
    def edge_count(self) -> int:
        return sum(len(a) for a in self.adjacency) // 2

    def neighbours(self, x: int) -> Tuple[int, ...]:
        return self.adjacency[x]

    @cached_property
    def neighbour_sets(self) -> Tuple[FrozenSet[int], ...]:
        return tuple(frozenset(a) for a in self.adjacency)

    def adjacent(self, x: int, y: int) -> bool:
        return y in self.neighbour_sets[x]

    def degree(self, x: int) -> int:
        return len(self.adjacency[x])

    def is_regular(self) -> bool:
        return len({len(a) for a in self.adjacency}) <= 1

    def is_connected(self) -> bool:
        return self.n > 0 and nx.is_connected(self.to_networkx())

    def is_complete(self) -> bool:
        return all(len(a) == self.n - 1 for a in self.adjacency)

    def induced(self, vertices: Sequence[int], name: str = "") -> "Graph":
        """Induced subgraph relabelled 0..m-1 in the given vertex order; may be disconnected."""
        index = {v: i for i, v in enumerate(vertices)}
        edges = [(index[x], index[y]) for x in vertices for y in self.adjacency[x] if y in index and x < y]
        return Graph.from_edges(len(vertices), edges, name, connected=False)

    def __str__(self) -> str:
        return self.name or f"graph(n={self.n}, m={self.edge_count})"


@dataclass(frozen=True)
class DistanceMatrix:
    """All-pairs shortest-path distances of a connected graph."""

    n: int
    entries: Tuple[Tuple[int, ...], ...]

    def __getitem__(self, index: Tuple[int, int]) -> int:
        x, y = index
        return self.entries[x][y]

    @property
    def diameter(self) -> int:
        return max(max(row) for row in self.entries)

    def pairs_at(self, i: int) -> List[Tuple[int, int]]:
        return [(x, y) for x in range(self.n) for y in range(self.n) if self.entries[x][y] == i]

    def sphere(self, x: int, i: int) -> List[int]:
        return [y for y in range(self.n) if self.entries[x][y] == i]

    @cached_property
    def distance_triples(self) -> FrozenSet[Tuple[int, int, int]]:
        """Realised (d(x,y), d(y,z), d(x,z)) over all vertex triples."""
        triples = set()
        rows = self.entries
        for x in range(self.n):
            rx = rows[x]
            for y in range(self.n):
                dxy = rx[y]
                ry = rows[y]
                for z in range(self.n):
                    triples.add((dxy, ry[z], rx[z]))
        return frozenset(triples)


def all_pairs_distances(g: Graph) -> DistanceMatrix:
    """BFS from every vertex."""
    lengths = dict(nx.all_pairs_shortest_path_length(g.to_networkx()))
    rows = []
    for x in range(g.n):
        reach = lengths[x]
        if len(reach) != g.n:
            raise Disconnected(f"{g} is not connected: vertex {x} reaches {len(reach)} of {g.n} vertices")
        rows.append(tuple(reach[y] for y in range(g.n)))
    return DistanceMatrix(g.n, tuple(rows))


# Edge-list exchange: "n m" header, then one "u v" line per edge, 0-indexed

def read_edge_list(path: str, name: str = "") -> Graph:
    lines = [line.split() for line in Path(path).read_text().splitlines() if line.strip() and not line.startswith("#")]
    if not lines or len(lines[0]) != 2:
        raise UsageError(f"{path}: expected an 'n m' header")
    try:
        n, m = int(lines[0][0]), int(lines[0][1])
        edges = [(int(u), int(v)) for u, v in lines[1:]]
    except ValueError as exc:
        raise UsageError(f"{path}: malformed edge list ({exc})") from exc
    if len(edges) != m:
        raise UsageError(f"{path}: header announces {m} edges, found {len(edges)}")
    if any(not (0 <= u < n and 0 <= v < n) for u, v in edges):
        raise UsageError(f"{path}: vertex out of range 0..{n - 1}")
    return Graph.from_edges(n, edges, name or Path(path).stem)


def write_edge_list(g: Graph, path: str) -> None:
    edges = g.edges()
    out = [f"{g.n} {len(edges)}"] + [f"{u} {v}" for u, v in edges]
    Path(path).parent.mkdir(parents=True, exist_ok=True)
    Path(path).write_text("\n".join(out) + "\n")
    logger.debug("wrote %d edges to %s", len(edges), path)
