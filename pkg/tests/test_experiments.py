"""
Tests de los experimentos: clasificación exhaustiva, barridos aleatorios y
auditoría de redes.
"""
import os
import sys
from fractions import Fraction

# Agregar el directorio raíz al path para importaciones
ROOT_DIR = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
if ROOT_DIR not in sys.path:
    sys.path.insert(0, ROOT_DIR)

import pytest

from antiresolve import AnalysisBudget
from data import ResultsLogger, ResultsRepository
from enumeration import enumerate_all, enumerate_connected
from events import EventType, event_bus
from experiments import (
    ClassificationOptions,
    audit_file,
    audit_network,
    classify_order,
    classify_stream,
    run_manifest,
    sweep,
)
from families import path
from ingest import parse_edge_list
from randgen import RandomModelConfig, SweepManifest


# ==================== CLASIFICACIÓN ====================

@pytest.mark.parametrize("n, total, connected, found, ratio, max_density", [
    (3, 4, 2, 0, "0.000000", None),
    (4, 11, 6, 1, "0.166666", "0.50"),
    (5, 34, 21, 0, "0.000000", None),
    (6, 156, 112, 1, "0.008928", "0.33"),
])
def test_classification_rows(n, total, connected, found, ratio, max_density):
    row = classify_order(n)
    assert row.total == total
    assert row.connected == connected
    assert row.found == found
    assert row.ratio == ratio
    assert row.max_density_str == max_density
    assert row.undecided == 0


@pytest.mark.slow
@pytest.mark.parametrize("n, connected, found, ratio, max_density", [
    (7, 853, 2, "0.002344", "0.33"),
    (8, 11117, 13, "0.001169", "0.35"),
])
def test_classification_rows_large(n, connected, found, ratio, max_density):
    row = classify_order(n, ClassificationOptions(workers=2), with_total=False)
    assert row.connected == connected
    assert row.found == found
    assert row.ratio == ratio
    assert row.max_density_str == max_density


def test_classification_found_graph_details():
    found = []
    row = classify_order(4, on_found=found.append)
    assert len(found) == 1
    assert found[0].degree_sequence() == path(4).degree_sequence()
    assert row.connectivity == {1: 1}
    assert row.found_geodetic == 1
    assert row.to_table_row() == {
        'order': 4,
        'total': 11,
        'connected': 6,
        'found': 1,
        'ratio': "0.166666",
        'connectivity': "1:1",
        'max_density': "0.50",
    }


def test_classification_density_breakdown():
    row = classify_order(4, ClassificationOptions(density=True), with_total=False)
    assert [b.to_dict() for b in row.breakdown] == [
        {'density': "0.50", 'found': 1, 'others': 1},
        {'density': "0.66", 'found': 0, 'others': 2},
        {'density': "0.83", 'found': 0, 'others': 1},
        {'density': "1.00", 'found': 0, 'others': 1},
    ]


def test_classify_stream_counts_disconnected_as_skipped():
    rows = classify_stream(enumerate_all(3))
    assert len(rows) == 1
    assert rows[0].skipped == 2
    assert rows[0].connected == 2


def test_classify_stream_mixed_orders_and_workers():
    graphs = list(enumerate_connected(4)) + list(enumerate_connected(3)) + [path(6)]
    serial = classify_stream(graphs)
    parallel = classify_stream(graphs, ClassificationOptions(workers=2, chunksize=2))
    assert [r.order for r in serial] == [3, 4, 6]
    assert [r.to_dict() for r in serial] == [r.to_dict() for r in parallel]


def test_classification_emits_found_events():
    event_bus.clear_history()
    classify_order(4, with_total=False)
    events = event_bus.get_recent_events(EventType.GRAPH_FOUND)
    assert [e.data['graph6'] for e in events] and events[-1].data['order'] == 4
    assert event_bus.get_recent_events(EventType.CLASSIFICATION_ROW)


# ==================== BARRIDOS ====================

def test_sweep_counts():
    cfg = RandomModelConfig(model="gnm", n=7, m=6, seed=11, samples=30)
    record = sweep(cfg, workers=1)
    assert record.generated == 30
    assert record.connected <= 30
    assert record.found <= record.connected
    assert record.distinct_enabled
    assert record.distinct_found <= record.found
    assert sum(record.connectivity.values()) == record.found


def test_sweep_does_not_depend_on_worker_count():
    cfg = RandomModelConfig(model="ba", n=9, m=1, seed=5, samples=24)
    assert sweep(cfg, workers=1) == sweep(cfg, workers=3)


def test_sweep_distinct_limit():
    cfg = RandomModelConfig(model="ba", n=9, m=1, seed=5, samples=4)
    assert sweep(cfg, workers=1, distinct_limit=8).distinct_found is None


def test_ba_trees_of_order_four_are_paths_or_stars():
    cfg = RandomModelConfig(model="ba", n=4, m=1, seed=2, samples=20)
    record = sweep(cfg, workers=1)
    assert record.connected == 20
    assert record.distinct_found in (0, 1)


@pytest.mark.slow
@pytest.mark.parametrize("n", [11, 12])
def test_gnp_quarter_sweep_finds_few_graphs(n):
    cfg = RandomModelConfig(model="gnp", n=n, p=0.25, seed=1, samples=20_000)
    record = sweep(cfg)
    assert record.generated == 20_000
    assert 0 < record.found
    assert record.found_rate < Fraction(1, 100)
    assert set(record.connectivity) <= {1, 2}


def test_run_manifest_logs_every_record(tmp_path):
    repository = ResultsRepository(str(tmp_path))
    logger = ResultsLogger("sweeps", repository)
    manifest = SweepManifest(model="gnm", n=6, m_range=(5, 7), seed=3, samples=5)
    records = run_manifest(manifest, workers=1, logger=logger)
    assert [r.config['m'] for r in records] == [5, 6, 7]
    saved = repository.read_records("sweeps", "sweep")
    assert [r['config']['m'] for r in saved] == [5, 6, 7]
    assert saved[0]['metrics']['generated'] == 5


# ==================== AUDITORÍAS ====================

def test_audit_reduces_to_largest_component():
    lg = parse_edge_list(["a b", "b c", "c d", "x y"])
    audit = audit_network(lg, "toy")
    assert audit.n == 4
    assert audit.m == 3
    assert audit.file_n == 6
    assert audit.file_m == 4
    assert audit.file_density == pytest.approx(4 / 15)
    assert audit.file_max_degree == 2
    assert audit.file_min_degree == 1
    assert audit.density == pytest.approx(3 / 6)
    assert audit.connected is False
    assert audit.dropped == 2
    assert audit.verdict == "IS_ONE"
    assert audit.decided_by == "adim1"
    assert audit.seconds >= 0


def test_audit_of_star_is_decided_by_module(tmp_path):
    path_ = tmp_path / "hub.txt"
    path_.write_text("0 1\n0 2\n0 3\n0 4\n", encoding="utf-8")
    audit = audit_file(path_)
    assert audit.name == "hub"
    assert audit.verdict == "NOT_ONE"
    assert audit.decided_by == "module"
    assert audit.witness_k == 4
    assert audit.max_degree == 4 and audit.min_degree == 1


def test_audit_with_exhausted_budget():
    lg = parse_edge_list([f"{i} {i + 1}" for i in range(40)])
    audit = audit_network(lg, "long-path", AnalysisBudget(adim1_seconds=1e-9))
    assert audit.verdict == "UNDECIDED"
    assert audit.witness_k is None
