"""
Algoritmo ADIM-1: decide si Adim(G) = 1.

Para cada vértice inicial v se parte de S = {v}; mientras alguna clase de
V∖S sea unitaria, esas clases se absorben en S. Si en algún momento la clase
mínima tiene tamaño k > 1, S es un k-ARS y Adim(G) >= k > 1. Si todos los
vértices iniciales llegan a S = V, Adim(G) = 1.

Las representaciones se refinan de forma incremental: cada vértice añadido a
S aporta una sola fila BFS, y las filas se cachean entre vértices iniciales.
"""
import time
from collections import Counter
from typing import List, Optional, Tuple

from graphcore import BudgetExceeded, DisconnectedGraph, DistanceOracle, Graph, InvalidGraph

from antiresolve.report import (
    SOURCE_ADIM1,
    SOURCE_MAX_DEGREE,
    SOURCE_TRIVIAL,
    AdimReport,
    BoundKind,
    Verdict,
    Witness,
)


def _run_from(v: int, oracle: DistanceOracle, n: int, deadline: Optional[float]) -> Optional[Tuple[Tuple[int, ...], int]]:
    """Absorption loop from start vertex v. Returns (S, k) when some k > 1 appears."""
    in_s = [False] * n
    in_s[v] = True
    S: List[int] = [v]
    labels = list(oracle.row(v))

    while True:
        if deadline is not None and time.perf_counter() > deadline:
            raise BudgetExceeded(f"ADIM-1 budget exhausted at start vertex {v}")
        outside = [x for x in range(n) if not in_s[x]]
        if not outside:
            return None
        sizes = Counter(labels[x] for x in outside)
        k = min(sizes.values())
        if k > 1:
            return tuple(sorted(S)), k

        singles = [x for x in outside if sizes[labels[x]] == 1]
        for s in singles:
            in_s[s] = True
        S.extend(singles)

        rows = [oracle.row(s) for s in singles]
        remap = {}
        for x in outside:
            if in_s[x]:
                continue
            key = (labels[x],) + tuple(row[x] for row in rows)
            labels[x] = remap.setdefault(key, len(remap))


def adim1_check(
    g: Graph,
    oracle: Optional[DistanceOracle] = None,
    deadline: Optional[float] = None,
) -> AdimReport:
    """
    Decides whether Adim(G) = 1.

    Start vertices are tried in ascending id order. The verdict does not
    depend on that order; the returned witness may.

    Args:
        g: Connected graph with at least two vertices.
        oracle: Optional shared distance cache.
        deadline: Absolute time.perf_counter() value after which the run aborts.

    Returns:
        AdimReport with verdict IS_ONE (exact = 1) or NOT_ONE with a (S, k) witness.

    Raises:
        DisconnectedGraph: g is not connected.
        InvalidGraph: g has fewer than two vertices.
        BudgetExceeded: deadline passed.
    """
    if g.n < 2:
        raise InvalidGraph("ADIM-1 needs at least two vertices")
    if not g.is_connected():
        raise DisconnectedGraph("ADIM-1 needs a connected graph")
    oracle = oracle or DistanceOracle(g)
    started = time.perf_counter()

    for v in range(g.n):
        found = _run_from(v, oracle, g.n, deadline)
        if found is not None:
            S, k = found
            report = AdimReport(Verdict.NOT_ONE, witness=Witness(S, k), decided_by=SOURCE_ADIM1)
            report.add(BoundKind.LOWER, k, SOURCE_ADIM1)
            report.add(BoundKind.UPPER, g.max_degree, SOURCE_MAX_DEGREE)
            report.elapsed = time.perf_counter() - started
            return report

    report = AdimReport(Verdict.IS_ONE, exact=1, decided_by=SOURCE_ADIM1)
    report.add(BoundKind.LOWER, 1, SOURCE_TRIVIAL)
    report.add(BoundKind.UPPER, 1, SOURCE_ADIM1)
    report.elapsed = time.perf_counter() - started
    return report
