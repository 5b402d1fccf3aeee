"""
Oráculo exhaustivo: Adim(G) y adim_k(G) por fuerza bruta.

Sólo para verificación sobre grafos pequeños (2^n subconjuntos).
"""
from collections import Counter
from itertools import combinations
from typing import Dict, Optional, Tuple

from graphcore import DisconnectedGraph, DistanceOracle, Graph, InvalidGraph, TooLarge
from utils.settings import get_settings

from antiresolve.report import AdimTable


def adim_oracle(g: Graph, limit: Optional[int] = None) -> AdimTable:
    """
    Exact Adim(G) and adim_k(G) for every realized k.

    Subsets are scanned by increasing size, so the first set realizing a
    given k is a smallest one.

    Args:
        g: Connected graph with at least two vertices.
        limit: Max accepted order (default from settings, usually 12).

    Raises:
        TooLarge: n exceeds the limit.
        DisconnectedGraph: g is not connected.
    """
    if limit is None:
        limit = get_settings().oracle_limit
    if g.n > limit:
        raise TooLarge(f"oracle refuses n={g.n} > limit {limit} (2^n subsets)")
    if g.n < 2:
        raise InvalidGraph("oracle needs at least two vertices")
    if not g.is_connected():
        raise DisconnectedGraph("oracle needs a connected graph")

    rows = DistanceOracle(g).matrix()
    n = g.n
    adim_k: Dict[int, int] = {}
    witnesses: Dict[int, Tuple[int, ...]] = {}

    for size in range(1, n):
        for S in combinations(range(n), size):
            members = set(S)
            sizes = Counter(
                tuple(rows[s][x] for s in S) for x in range(n) if x not in members
            )
            k = min(sizes.values())
            if k not in adim_k:
                adim_k[k] = size
                witnesses[k] = S

    return AdimTable(adim=max(adim_k), adim_k=adim_k, witnesses=witnesses)
