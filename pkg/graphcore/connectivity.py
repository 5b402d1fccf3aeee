"""
Conectividad de vértices, bloques y vértices de corte (vía networkx).
"""
from typing import List, Set

import networkx as nx

from graphcore.errors import InvalidGraph
from graphcore.graph import Graph


def vertex_connectivity(g: Graph) -> int:
    """
    Exact vertex connectivity κ(G).

    Fast path: 0 when disconnected, 1 when an articulation vertex exists.
    Otherwise the minimum vertex cut is found by unit-capacity max-flow
    (networkx node_connectivity). Complete graphs give n - 1.

    Raises:
        InvalidGraph: g has fewer than two vertices.
    """
    if g.n < 2:
        raise InvalidGraph("vertex connectivity needs at least two vertices")
    if not g.is_connected():
        return 0
    if g.is_complete():
        return g.n - 1
    nxg = g.to_networkx()
    if next(nx.articulation_points(nxg), None) is not None:
        return 1
    return nx.node_connectivity(nxg)


def cut_vertices(g: Graph) -> Set[int]:
    return set(nx.articulation_points(g.to_networkx()))


def biconnected_blocks(g: Graph) -> List[frozenset]:
    """Blocks (biconnected components and bridges), ordered by smallest member."""
    blocks = [frozenset(b) for b in nx.biconnected_components(g.to_networkx())]
    return sorted(blocks, key=lambda b: (min(b), len(b)))


def is_block_graph(g: Graph) -> bool:
    """True iff g is connected and every block induces a complete graph."""
    if not g.is_connected():
        return False
    for block in biconnected_blocks(g):
        size = len(block)
        inner = sum(len(g.adjacency[v] & block) for v in block) // 2
        if inner != size * (size - 1) // 2:
            return False
    return True
