"""
Grafo simple no dirigido e inmutable.

Los vértices son enteros densos 0..n-1; las etiquetas externas viven sólo en
la capa de ingesta. Una vez construido, el grafo se puede compartir entre
hilos y procesos sin sincronización.
"""
from collections import deque
from dataclasses import dataclass, field
from typing import FrozenSet, Iterable, Iterator, List, Sequence, Tuple

import networkx as nx

from graphcore.errors import InvalidGraph


@dataclass(frozen=True)
class Graph:
    """
    Simple undirected graph on vertices 0..n-1.

    Attributes:
        n: Vertex count.
        adjacency: Neighbor set of every vertex, symmetric.
        edge_count: Number of edges.
    """
    n: int
    adjacency: Tuple[FrozenSet[int], ...]
    edge_count: int
    _masks: Tuple[int, ...] = field(default=(), repr=False, compare=False, hash=False)

    def neighbors(self, v: int) -> FrozenSet[int]:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]

    @property
    def vertices(self) -> range:
        return range(self.n)

    @property
    def max_degree(self) -> int:
        return max((len(nbrs) for nbrs in self.adjacency), default=0)

    @property
    def min_degree(self) -> int:
        return min((len(nbrs) for nbrs in self.adjacency), default=0)

    @property
    def density(self) -> float:
        """edge_count / (n(n-1)/2); 0.0 for graphs with fewer than two vertices."""
        if self.n < 2:
            return 0.0
        return self.edge_count / (self.n * (self.n - 1) / 2)

    @property
    def masks(self) -> Tuple[int, ...]:
        """Adjacency rows as integer bitmasks (bit v of masks[u] set iff uv is an edge)."""
        if not self._masks and self.n:
            rows = tuple(sum(1 << v for v in nbrs) for nbrs in self.adjacency)
            object.__setattr__(self, "_masks", rows)
        return self._masks

    def edges(self) -> Iterator[Tuple[int, int]]:
        """Edges as (u, v) with u < v, in lexicographic order."""
        for u in range(self.n):
            for v in sorted(self.adjacency[u]):
                if u < v:
                    yield (u, v)

    def degree_sequence(self) -> Tuple[int, ...]:
        return tuple(sorted((len(nbrs) for nbrs in self.adjacency), reverse=True))

    # ==================== CONECTIVIDAD ====================

    def components(self) -> List[List[int]]:
        """Connected components, each sorted, ordered by smallest member."""
        seen = [False] * self.n
        result: List[List[int]] = []
        for start in range(self.n):
            if seen[start]:
                continue
            seen[start] = True
            queue = deque([start])
            comp = [start]
            while queue:
                u = queue.popleft()
                for w in self.adjacency[u]:
                    if not seen[w]:
                        seen[w] = True
                        comp.append(w)
                        queue.append(w)
            result.append(sorted(comp))
        return result

    def is_connected(self) -> bool:
        if self.n == 0:
            return False
        return len(self.components()) == 1

    def is_complete(self) -> bool:
        return self.edge_count == self.n * (self.n - 1) // 2

    def is_regular(self) -> bool:
        return self.max_degree == self.min_degree

    def is_tree(self) -> bool:
        return self.n >= 1 and self.edge_count == self.n - 1 and self.is_connected()

    # ==================== DERIVADOS ====================

    def induced_subgraph(self, vertices: Iterable[int]) -> Tuple["Graph", Tuple[int, ...]]:
        """
        Subgraph induced by `vertices`, relabeled to dense ids.

        Returns:
            The subgraph and the tuple mapping new id -> original id.
        """
        kept = tuple(sorted(set(vertices)))
        index = {v: i for i, v in enumerate(kept)}
        edges = [
            (index[u], index[w])
            for u in kept
            for w in self.adjacency[u]
            if w in index and u < w
        ]
        return build_graph(len(kept), edges), kept

    def complement(self) -> "Graph":
        full = frozenset(range(self.n))
        adjacency = tuple(full - self.adjacency[v] - {v} for v in range(self.n))
        return Graph(self.n, adjacency, self.n * (self.n - 1) // 2 - self.edge_count)

    def relabel(self, order: Sequence[int]) -> "Graph":
        """Graph whose vertex i is the vertex order[i] of this graph."""
        position = {v: i for i, v in enumerate(order)}
        return build_graph(self.n, [(position[u], position[v]) for u, v in self.edges()])

    def to_networkx(self) -> nx.Graph:
        nxg = nx.Graph()
        nxg.add_nodes_from(range(self.n))
        nxg.add_edges_from(self.edges())
        return nxg

    @classmethod
    def from_networkx(cls, nxg: nx.Graph) -> "Graph":
        """
        Converts a networkx graph. Integer nodes 0..n-1 keep their ids; any
        other labeling is mapped to dense ids in sorted node order.
        """
        nodes = list(nxg.nodes())
        if set(nodes) == set(range(len(nodes))):
            mapping = {v: v for v in nodes}
        else:
            try:
                ordered = sorted(nodes)
            except TypeError:
                ordered = nodes
            mapping = {v: i for i, v in enumerate(ordered)}
        edges = [(mapping[u], mapping[v]) for u, v in nxg.edges() if u != v]
        return build_graph(len(nodes), edges)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.edge_count})"


def build_graph(n: int, edges: Iterable[Tuple[int, int]]) -> Graph:
    """
    Builds a simple undirected graph, dropping duplicate edges.

    Args:
        n: Vertex count; vertices are 0..n-1.
        edges: Vertex pairs.

    Returns:
        Graph with symmetric adjacency.

    Raises:
        InvalidGraph: Negative n, out-of-range vertex id or self-loop.
    """
    if not isinstance(n, int) or n < 0:
        raise InvalidGraph(f"vertex count must be a non-negative integer, got {n!r}")
    adjacency = [set() for _ in range(n)]
    count = 0
    for pair in edges:
        u, v = pair
        if not (0 <= u < n and 0 <= v < n):
            raise InvalidGraph(f"edge ({u}, {v}) has a vertex outside 0..{n - 1}")
        if u == v:
            raise InvalidGraph(f"self-loop at vertex {u}")
        if v not in adjacency[u]:
            adjacency[u].add(v)
            adjacency[v].add(u)
            count += 1
    return Graph(n, tuple(frozenset(nbrs) for nbrs in adjacency), count)
