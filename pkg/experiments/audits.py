"""
Auditoría de redes reales: estadísticas de cabecera y veredicto con el
tiempo hasta la decisión.
"""
import time
from pathlib import Path
from typing import Optional, Union

from antiresolve import AnalysisBudget, analyze
from ingest import EdgeListOptions, LabeledGraph, largest_component, load_edge_list
from data.models import NetworkAudit
from events.event_bus import on_audit_decided
from utils.utils import Utils


def audit_network(lg: LabeledGraph, name: str, budget: Optional[AnalysisBudget] = None) -> NetworkAudit:
    """
    Audits one network. A disconnected input is reduced to its largest
    component with a warning; the whole-file statistics are kept in the
    file_* fields.

    Args:
        lg: Parsed network.
        name: Name used in the record.
        budget: Analysis budget; an exhausted budget leaves the verdict UNDECIDED.
    """
    whole = lg.graph
    component = lg
    connected = whole.is_connected()
    if not connected:
        component = largest_component(lg)
        Utils.log("Audit", f"⚠️ {name} is disconnected, keeping the largest component "
                           f"({component.graph.n} vertices, {component.dropped} dropped)")
    g = component.graph

    started = time.perf_counter()
    report = analyze(g, budget)
    seconds = time.perf_counter() - started

    audit = NetworkAudit(
        name=name,
        n=g.n,
        m=g.edge_count,
        density=g.density,
        max_degree=g.max_degree,
        min_degree=g.min_degree,
        connected=connected,
        dropped=component.dropped,
        verdict=report.verdict.value,
        decided_by=report.decided_by,
        witness_k=report.witness.k if report.witness else None,
        seconds=seconds,
        file_n=whole.n,
        file_m=whole.edge_count,
        file_density=whole.density,
        file_max_degree=whole.max_degree,
        file_min_degree=whole.min_degree,
    )
    Utils.log("Audit", f"{name}: n={g.n} m={g.edge_count} -> {audit.verdict} "
                       f"by {audit.decided_by} in {seconds:.2f}s")
    on_audit_decided(name, audit.verdict, audit.decided_by, seconds)
    return audit


def audit_file(
    path: Union[str, Path],
    options: Optional[EdgeListOptions] = None,
    budget: Optional[AnalysisBudget] = None,
    name: Optional[str] = None,
) -> NetworkAudit:
    """Loads an edge-list file and audits it under its file stem."""
    path = Path(path)
    return audit_network(load_edge_list(path, options), name or path.stem, budget)
