"""
Intervalos geodésicos, número geodésico 2 y conteo de caminos mínimos.
"""
from collections import deque
from itertools import combinations
from typing import FrozenSet, Optional, Tuple

from graphcore.distances import DistanceOracle
from graphcore.errors import DisconnectedGraph
from graphcore.graph import Graph


def _require_connected(g: Graph) -> None:
    if not g.is_connected():
        raise DisconnectedGraph("graph is not connected")


def interval(g: Graph, u: int, v: int, oracle: Optional[DistanceOracle] = None) -> FrozenSet[int]:
    """
    I[u,v]: vertices lying on some shortest u,v-path.

    Raises:
        DisconnectedGraph: g is not connected.
    """
    _require_connected(g)
    oracle = oracle or DistanceOracle(g)
    du, dv = oracle.row(u), oracle.row(v)
    target = du[v]
    return frozenset(w for w in range(g.n) if du[w] + dv[w] == target)


def has_geodetic_number_two(g: Graph, oracle: Optional[DistanceOracle] = None) -> Optional[Tuple[int, int]]:
    """
    A pair (u, v) with I[u,v] = V(G), or None.

    Only pairs at distance diam(G) can cover V, so the scan starts from
    peripheral vertices. Pairs are tried in lexicographic order.

    Raises:
        DisconnectedGraph: g is not connected.
    """
    _require_connected(g)
    if g.n == 1:
        return None
    oracle = oracle or DistanceOracle(g)
    diam = max(oracle.eccentricity(x) for x in range(g.n))
    peripheral = [x for x in range(g.n) if oracle.eccentricity(x) == diam]
    for u, v in combinations(peripheral, 2):
        du, dv = oracle.row(u), oracle.row(v)
        if du[v] != diam:
            continue
        if all(du[w] + dv[w] == diam for w in range(g.n)):
            return (u, v)
    return None


def count_shortest_paths(g: Graph, u: int) -> Tuple[int, ...]:
    """
    Number of distinct shortest u->w paths for every w (BFS DAG counting).

    Raises:
        DisconnectedGraph: g is not connected.
    """
    _require_connected(g)
    dist = [-1] * g.n
    counts = [0] * g.n
    dist[u] = 0
    counts[u] = 1
    queue = deque([u])
    while queue:
        x = queue.popleft()
        for w in g.adjacency[x]:
            if dist[w] < 0:
                dist[w] = dist[x] + 1
                queue.append(w)
            if dist[w] == dist[x] + 1:
                counts[w] += counts[x]
    return tuple(counts)
