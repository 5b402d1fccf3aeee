"""
Barridos sobre modelos aleatorios.

Cada muestra i se genera con su propia semilla derivada de (seed, i); los
trozos de índices se reparten entre procesos y los parciales se combinan
con una reducción conmutativa, así que el registro final no depende del
número de workers.
"""
from collections import Counter
from dataclasses import dataclass, field
from multiprocessing import Pool
from typing import List, Optional, Set

from graphcore import vertex_connectivity
from antiresolve import AnalysisBudget, Verdict, analyze
from enumeration import CANONICAL_MAX_ORDER, canonical_form
from randgen import RandomModelConfig, SweepManifest, generate
from data.models import SweepRecord
from data.results_logger import ResultsLogger
from events.event_bus import on_sweep_finished, on_sweep_started
from utils.settings import default_workers, get_settings
from utils.utils import Utils


@dataclass
class _Partial:
    generated: int = 0
    connected: int = 0
    found: int = 0
    undecided: int = 0
    connectivity: Counter = field(default_factory=Counter)
    max_found_edges: Optional[int] = None
    keys: Set[bytes] = field(default_factory=set)

    def merge(self, other: "_Partial") -> None:
        self.generated += other.generated
        self.connected += other.connected
        self.found += other.found
        self.undecided += other.undecided
        self.connectivity.update(other.connectivity)
        if other.max_found_edges is not None:
            self.max_found_edges = max(self.max_found_edges or 0, other.max_found_edges)
        self.keys |= other.keys


def _sweep_chunk(args) -> _Partial:
    cfg, start, stop, budget, distinct = args
    partial = _Partial()
    for index in range(start, stop):
        g = generate(cfg, index)
        partial.generated += 1
        if g.n < 2 or not g.is_connected():
            continue
        partial.connected += 1
        report = analyze(g, budget)
        if report.verdict is Verdict.UNDECIDED:
            partial.undecided += 1
            continue
        if report.verdict is not Verdict.IS_ONE:
            continue
        partial.found += 1
        partial.connectivity[vertex_connectivity(g)] += 1
        partial.max_found_edges = max(partial.max_found_edges or 0, g.edge_count)
        if distinct:
            partial.keys.add(canonical_form(g))
    return partial


def sweep(
    cfg: RandomModelConfig,
    workers: Optional[int] = None,
    budget: Optional[AnalysisBudget] = None,
    distinct_limit: Optional[int] = None,
) -> SweepRecord:
    """
    Generates cfg.samples graphs, keeps the connected ones and counts the
    1-metric antidimensional ones.

    Args:
        cfg: Random model and sample count.
        workers: Worker processes (default ANTIDIM_WORKERS or CPU count).
        budget: Analysis budget per sample.
        distinct_limit: Max order for the canonical "distinct found" count
            (default ANTIDIM_DISTINCT_LIMIT, never above 10).

    Returns:
        SweepRecord, identical for any worker count.
    """
    workers = workers or default_workers()
    limit = distinct_limit if distinct_limit is not None else get_settings().distinct_limit
    distinct = cfg.n <= min(limit, CANONICAL_MAX_ORDER)
    config = cfg.model_dump(mode="json")
    on_sweep_started(config, workers)
    Utils.log("Sweep", f"{cfg.label()}: {cfg.samples} samples on {workers} workers")

    size = max(1, -(-cfg.samples // (workers * 4)))
    chunks = [
        (cfg, start, min(start + size, cfg.samples), budget, distinct)
        for start in range(0, cfg.samples, size)
    ]
    if workers > 1 and len(chunks) > 1:
        with Pool(processes=min(workers, len(chunks))) as pool:
            partials = pool.map(_sweep_chunk, chunks)
    else:
        partials = [_sweep_chunk(chunk) for chunk in chunks]

    total = _Partial()
    for partial in partials:
        total.merge(partial)

    record = SweepRecord(
        config=config,
        generated=total.generated,
        connected=total.connected,
        found=total.found,
        undecided=total.undecided,
        distinct_found=len(total.keys) if distinct else None,
        connectivity=dict(total.connectivity),
        max_found_edges=total.max_found_edges,
    )
    Utils.log("Sweep", f"{cfg.label()}: {record.connected} connected, {record.found} found")
    on_sweep_finished(record.to_dict())
    return record


def run_manifest(
    manifest: SweepManifest,
    workers: Optional[int] = None,
    budget: Optional[AnalysisBudget] = None,
    logger: Optional[ResultsLogger] = None,
) -> List[SweepRecord]:
    """
    Runs every configuration of a manifest in order. Each record is appended
    to the results log when a logger is given.
    """
    records = []
    configs = manifest.expand()
    for i, cfg in enumerate(configs, start=1):
        Utils.log("Sweep", f"Configuration {i}/{len(configs)}")
        record = sweep(cfg, workers, budget)
        if logger is not None:
            logger.log_sweep(record)
        records.append(record)
    return records
