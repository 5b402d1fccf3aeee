"""
Clasificación exhaustiva: cuenta, por orden, los grafos conexos que son
1-métricos antidimensionales.

La conectividad, la densidad máxima y el recuento de geodésicos se calculan
sólo sobre los grafos encontrados.
"""
from dataclasses import dataclass
from fractions import Fraction
from functools import partial
from multiprocessing import Pool
from typing import Callable, Dict, Iterable, List, Optional

from pydantic import BaseModel, Field

from graphcore import Graph, vertex_connectivity
from antiresolve import AnalysisBudget, Verdict, analyze
from structure import is_geodetic
from enumeration import enumerate_all, enumerate_connected
from ingest import write_graph6
from data.models import ClassificationRow, DensityBucket, density_fraction, truncate
from events.event_bus import on_classification_row, on_graph_found
from utils.utils import Utils


class ClassificationOptions(BaseModel):
    """
    Attributes:
        density: Add the per-density breakdown (density, found, others).
        geodetic: Count the geodetic graphs among the found ones.
        workers: Worker processes; results do not depend on it.
        chunksize: Graphs sent to a worker at a time.
    """
    density: bool = False
    geodetic: bool = True
    workers: int = Field(default=1, ge=1)
    chunksize: int = Field(default=64, ge=1)


@dataclass(frozen=True)
class _Outcome:
    order: int
    connected: bool
    verdict: Optional[Verdict] = None
    edges: int = 0
    kappa: Optional[int] = None
    geodetic: bool = False


def _evaluate(g: Graph, budget: Optional[AnalysisBudget], geodetic: bool) -> _Outcome:
    if g.n < 2 or not g.is_connected():
        return _Outcome(g.n, False)
    report = analyze(g, budget)
    if report.verdict is not Verdict.IS_ONE:
        return _Outcome(g.n, True, report.verdict, g.edge_count)
    return _Outcome(
        g.n,
        True,
        report.verdict,
        g.edge_count,
        kappa=vertex_connectivity(g),
        geodetic=geodetic and is_geodetic(g),
    )


def _outcomes(graphs: Iterable[Graph], options: ClassificationOptions, budget: Optional[AnalysisBudget]):
    evaluate = partial(_evaluate, budget=budget, geodetic=options.geodetic)
    if options.workers <= 1:
        for g in graphs:
            yield g, evaluate(g)
        return
    # imap conserva el orden de entrada
    graphs = list(graphs)
    with Pool(processes=options.workers) as pool:
        yield from zip(graphs, pool.imap(evaluate, graphs, chunksize=options.chunksize))


def classify_stream(
    graphs: Iterable[Graph],
    options: Optional[ClassificationOptions] = None,
    budget: Optional[AnalysisBudget] = None,
    on_found: Optional[Callable[[Graph], None]] = None,
) -> List[ClassificationRow]:
    """
    One ClassificationRow per order present in the stream.

    Disconnected inputs are counted as skipped. Graphs whose analysis ran out
    of budget are counted as undecided, never as found.

    Args:
        graphs: Graph stream, any mix of orders.
        options: Breakdown, geodetic count and parallelism.
        budget: Analysis budget for every graph.
        on_found: Called with every 1-metric antidimensional graph, in stream order.

    Returns:
        Rows sorted by order.
    """
    options = options or ClassificationOptions()
    rows: Dict[int, ClassificationRow] = {}
    buckets: Dict[int, Dict[Fraction, DensityBucket]] = {}

    for g, outcome in _outcomes(graphs, options, budget):
        row = rows.setdefault(outcome.order, ClassificationRow(order=outcome.order))
        if not outcome.connected:
            row.skipped += 1
            continue
        row.connected += 1
        if outcome.verdict is Verdict.UNDECIDED:
            row.undecided += 1
            continue
        density = density_fraction(g.n, outcome.edges)
        found = outcome.verdict is Verdict.IS_ONE
        if options.density:
            key = Fraction(int(density * 100), 100)
            bucket = buckets.setdefault(g.n, {}).setdefault(key, DensityBucket(truncate(key, 2)))
            if found:
                bucket.found += 1
            else:
                bucket.others += 1
        if not found:
            continue
        row.found += 1
        row.connectivity[outcome.kappa] = row.connectivity.get(outcome.kappa, 0) + 1
        if row.max_density is None or density > row.max_density:
            row.max_density = density
        if outcome.geodetic:
            row.found_geodetic += 1
        on_graph_found(g.n, write_graph6(g).decode("ascii"), outcome.kappa)
        if on_found is not None:
            on_found(g)

    result = []
    for order in sorted(rows):
        row = rows[order]
        if options.density:
            row.breakdown = [buckets.get(order, {})[key] for key in sorted(buckets.get(order, {}))]
        Utils.log("Classify", f"Order {order}: {row.found}/{row.connected} found, ratio {row.ratio}")
        on_classification_row(row.to_dict())
        result.append(row)
    return result


def classify_order(
    n: int,
    options: Optional[ClassificationOptions] = None,
    budget: Optional[AnalysisBudget] = None,
    with_total: bool = True,
    on_found: Optional[Callable[[Graph], None]] = None,
) -> ClassificationRow:
    """
    Classification row for order n from the built-in enumeration (2 <= n <= 8),
    with the count of all graphs of order n in `total` when requested.
    """
    rows = classify_stream(enumerate_connected(n), options, budget, on_found)
    row = rows[0] if rows else ClassificationRow(order=n)
    if with_total:
        row.total = sum(1 for _ in enumerate_all(n))
    return row
