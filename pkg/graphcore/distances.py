"""
Distancias de camino más corto, excentricidades y perfil #ε.

Las filas de distancias se calculan por BFS bajo demanda y se cachean por
vértice origen. Un lector concurrente ve la fila ausente o completa.
"""
import threading
from collections import deque
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple, Union

from graphcore.errors import DisconnectedGraph, InvalidGraph
from graphcore.graph import Graph


class _Unreachable:
    """Distance to a vertex in another component. Any arithmetic raises TypeError."""
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "UNREACHABLE"

    def __reduce__(self):
        return (_Unreachable, ())

    def _reject(self, *_args):
        raise TypeError("arithmetic on UNREACHABLE distance")

    __add__ = __radd__ = __sub__ = __rsub__ = _reject
    __mul__ = __rmul__ = __floordiv__ = __truediv__ = _reject
    __neg__ = __abs__ = __int__ = __index__ = _reject
    __lt__ = __le__ = __gt__ = __ge__ = _reject


UNREACHABLE = _Unreachable()

Distance = Union[int, _Unreachable]


def distances_from(g: Graph, u: int) -> Tuple[Distance, ...]:
    """
    Single-source BFS distances.

    Args:
        g: Graph.
        u: Source vertex.

    Returns:
        Tuple indexed by vertex; UNREACHABLE for vertices in other components.

    Raises:
        InvalidGraph: u is not a vertex of g.
    """
    if not 0 <= u < g.n:
        raise InvalidGraph(f"vertex {u} outside 0..{g.n - 1}")
    dist: List[Distance] = [UNREACHABLE] * g.n
    dist[u] = 0
    queue = deque([u])
    adjacency = g.adjacency
    while queue:
        x = queue.popleft()
        dx = dist[x] + 1
        for w in adjacency[x]:
            if dist[w] is UNREACHABLE:
                dist[w] = dx
                queue.append(w)
    return tuple(dist)


class DistanceOracle:
    """
    Lazy all-pairs distances over an immutable graph.

    Rows are computed once per source and cached; `row()` is safe to call
    from several threads.
    """

    def __init__(self, g: Graph):
        self.graph = g
        self._rows: Dict[int, Tuple[Distance, ...]] = {}
        self._lock = threading.Lock()

    def row(self, u: int) -> Tuple[Distance, ...]:
        cached = self._rows.get(u)
        if cached is not None:
            return cached
        computed = distances_from(self.graph, u)
        with self._lock:
            return self._rows.setdefault(u, computed)

    def distance(self, u: int, v: int) -> Distance:
        return self.row(u)[v]

    @property
    def computed_rows(self) -> int:
        return len(self._rows)

    def _connected_row(self, u: int) -> Tuple[int, ...]:
        row = self.row(u)
        if any(d is UNREACHABLE for d in row):
            raise DisconnectedGraph("graph is not connected")
        return row

    def eccentricity(self, u: int) -> int:
        return max(self._connected_row(u))

    def ecc_count(self, u: int) -> int:
        """#ε(u): number of vertices at distance exactly ε(u) from u."""
        row = self._connected_row(u)
        ecc = max(row)
        if ecc == 0:
            return 0
        return sum(1 for d in row if d == ecc)

    def layers(self, u: int) -> List[List[int]]:
        """L_i(u) for i = 0..ε(u), each sorted."""
        row = self._connected_row(u)
        result: List[List[int]] = [[] for _ in range(max(row) + 1)]
        for v, d in enumerate(row):
            result[d].append(v)
        return result

    def matrix(self) -> List[Tuple[Distance, ...]]:
        return [self.row(u) for u in range(self.graph.n)]


@dataclass(frozen=True)
class EccProfile:
    """
    Eccentricity statistics of a connected graph.

    Attributes:
        eccentricities: ε(x) per vertex.
        ecc_counts: #ε(x) per vertex.
        ecc_count: #ε(G) = max_x #ε(x).
        witness: Smallest vertex attaining #ε(G).
        diameter: Max eccentricity.
        center: Vertices of minimum eccentricity.
    """
    eccentricities: Tuple[int, ...]
    ecc_counts: Tuple[int, ...]
    ecc_count: int
    witness: int
    diameter: int
    center: Tuple[int, ...]

    @property
    def radius(self) -> int:
        return min(self.eccentricities)


def ecc_profile(g: Graph, oracle: Optional[DistanceOracle] = None) -> EccProfile:
    """
    Exact eccentricity profile.

    Raises:
        DisconnectedGraph: g is not connected (or empty).
    """
    if g.n == 0:
        raise DisconnectedGraph("empty graph")
    oracle = oracle or DistanceOracle(g)
    eccs = tuple(oracle.eccentricity(u) for u in range(g.n))
    counts = tuple(oracle.ecc_count(u) for u in range(g.n))
    best = max(counts)
    radius = min(eccs)
    return EccProfile(
        eccentricities=eccs,
        ecc_counts=counts,
        ecc_count=best,
        witness=counts.index(best),
        diameter=max(eccs),
        center=tuple(u for u in range(g.n) if eccs[u] == radius),
    )


def diameter_exceeds(g: Graph, bound: int, oracle: Optional[DistanceOracle] = None) -> Optional[int]:
    """
    Returns the first vertex whose eccentricity exceeds `bound`, or None.
    Stops at the first such vertex, so graphs far from the bound exit after one BFS.
    """
    oracle = oracle or DistanceOracle(g)
    for u in range(g.n):
        if oracle.eccentricity(u) > bound:
            return u
    return None
