"""
Grafos geodésicos y su árbol de caminos mínimos T_u(G).

En un grafo geodésico, si Adim(T_u(G)) = 1 para todo u entonces Adim(G) = 1.
El recíproco no se cumple: "F?StG" tiene Adim = 1 pero T_0 es P_6 con una
hoja colgada del segundo vértice (factor de equilibrio 2).
"""
from collections import deque
from dataclasses import dataclass
from typing import Dict, FrozenSet, List, Optional, Tuple

from graphcore import DisconnectedGraph, Graph, NotGeodetic, build_graph, count_shortest_paths

from structure.trees import tree_adim1_check


def is_geodetic(g: Graph) -> bool:
    """
    True iff every pair of vertices has a unique shortest path.

    Raises:
        DisconnectedGraph: g is not connected.
    """
    if not g.is_connected():
        raise DisconnectedGraph("geodetic test needs a connected graph")
    return all(
        all(c == 1 for c in count_shortest_paths(g, u))
        for u in range(g.n)
    )


@dataclass(frozen=True)
class RootedSPTree:
    """
    Shortest-path tree T_u(G) of a geodetic graph.

    Attributes:
        root: The vertex u.
        parent: p_u(v) per vertex (None for the root).
        children: C_u(v) per vertex, sorted.
        depth: Graph distance from the root.
    """
    root: int
    parent: Tuple[Optional[int], ...]
    children: Tuple[Tuple[int, ...], ...]
    depth: Tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.parent)

    def descendants(self, v: int) -> FrozenSet[int]:
        """D_u(v), excluding v itself."""
        found = set()
        stack = list(self.children[v])
        while stack:
            x = stack.pop()
            found.add(x)
            stack.extend(self.children[x])
        return frozenset(found)

    def branches(self) -> Dict[int, FrozenSet[int]]:
        """Vertex set of the u-branch T_{u,v} for each child v of the root."""
        return {v: frozenset({self.root, v}) | self.descendants(v) for v in self.children[self.root]}

    def as_graph(self) -> Graph:
        return build_graph(self.n, [(p, v) for v, p in enumerate(self.parent) if p is not None])


def sp_tree(g: Graph, u: int) -> RootedSPTree:
    """
    The unique shortest-path tree rooted at u.

    Raises:
        NotGeodetic: some vertex has two neighbors one step closer to u.
        DisconnectedGraph: g is not connected.
    """
    if not g.is_connected():
        raise DisconnectedGraph("shortest-path tree needs a connected graph")
    depth = [-1] * g.n
    parent: List[Optional[int]] = [None] * g.n
    depth[u] = 0
    queue = deque([u])
    while queue:
        x = queue.popleft()
        for w in sorted(g.adjacency[x]):
            if depth[w] < 0:
                depth[w] = depth[x] + 1
                parent[w] = x
                queue.append(w)
            elif depth[w] == depth[x] + 1 and parent[w] != x:
                raise NotGeodetic(f"vertex {w} has two shortest paths from {u}")
    children: List[List[int]] = [[] for _ in range(g.n)]
    for v, p in enumerate(parent):
        if p is not None:
            children[p].append(v)
    return RootedSPTree(
        root=u,
        parent=tuple(parent),
        children=tuple(tuple(c) for c in children),
        depth=tuple(depth),
    )


def violating_roots(g: Graph) -> Tuple[int, ...]:
    """
    Roots u whose T_u(G) fails tree_adim1_check.

    Raises:
        NotGeodetic: g is not geodetic.
        DisconnectedGraph: g is not connected.
    """
    if not is_geodetic(g):
        raise NotGeodetic("graph has a pair with two shortest paths")
    return tuple(u for u in range(g.n) if not tree_adim1_check(sp_tree(g, u).as_graph()).holds)


def geodetic_adim1_check(g: Graph, deadline: Optional[float] = None) -> bool:
    """
    Adim(G) = 1 for geodetic G.

    Every T_u(G) passing tree_adim1_check settles True. A violating root is
    not conclusive (Adim(G) = 1 is still possible), so that case is decided
    by ADIM-1.

    Args:
        g: Connected geodetic graph.
        deadline: Passed to ADIM-1 for the inconclusive case.

    Raises:
        NotGeodetic: g is not geodetic.
        DisconnectedGraph: g is not connected.
        BudgetExceeded: ADIM-1 ran past the deadline.
    """
    if not violating_roots(g):
        return True
    # diferido: antiresolve importa structure
    from antiresolve.adim1 import adim1_check

    return adim1_check(g, deadline=deadline).is_one
