"""
Tests de particiones métricas, ADIM-1, oráculo exhaustivo, cotas y la
cascada de análisis.
"""
import os
import sys

# Agregar el directorio raíz al path para importaciones
ROOT_DIR = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
if ROOT_DIR not in sys.path:
    sys.path.insert(0, ROOT_DIR)

import pytest

from graphcore import (
    BudgetExceeded,
    DisconnectedGraph,
    EmptySet,
    FullSet,
    InvalidGraph,
    TooLarge,
    build_graph,
)
from antiresolve import (
    Adim1Stage,
    AnalysisBudget,
    Analyzer,
    BoundKind,
    Verdict,
    adim1_check,
    adim_oracle,
    analyze,
    bound_connectivity_ecc,
    bound_diam2,
    exact_regular_diam2,
    has_diameter_two,
    partition_by,
)
from events import EventType, event_bus
from families import complete, cycle, hamming, path, petersen, star, t_star


# ==================== PARTICIÓN MÉTRICA ====================

def test_partition_on_path():
    part = partition_by(path(4), [0])
    assert part.classes == ((1,), (2,), (3,))
    assert part.k == 1
    assert part.singletons == [1, 2, 3]


def test_partition_on_cycle_opposite_pair():
    part = partition_by(cycle(4), [0, 2])
    assert part.classes == ((1, 3),)
    assert part.representations == ((1, 1),)
    assert part.k == 2


def test_partition_classes_cover_complement():
    g = petersen()
    part = partition_by(g, [0, 5])
    covered = sorted(v for c in part.classes for v in c)
    assert covered == [v for v in range(g.n) if v not in (0, 5)]
    assert part.k == min(len(c) for c in part.classes)


def test_partition_rejects_bad_sets():
    with pytest.raises(EmptySet):
        partition_by(path(3), [])
    with pytest.raises(FullSet):
        partition_by(path(3), [0, 1, 2])
    with pytest.raises(InvalidGraph):
        partition_by(path(3), [5])
    with pytest.raises(DisconnectedGraph):
        partition_by(build_graph(4, [(0, 1), (2, 3)]), [0])


# ==================== ADIM-1 ====================

@pytest.mark.parametrize("g, expected", [
    (path(2), True),
    (path(4), True),
    (path(5), False),
    (path(6), True),
    (cycle(4), False),
    (complete(4), False),
    (star(4), False),
    (petersen(), False),
    (t_star(), True),
])
def test_adim1_check(g, expected):
    report = adim1_check(g)
    assert report.is_one is expected
    if expected:
        assert report.exact == 1
        assert report.witness is None
    else:
        assert report.verdict is Verdict.NOT_ONE
        assert report.witness.k > 1


def test_adim1_witness_is_a_real_antiresolving_set():
    report = adim1_check(path(5))
    part = partition_by(path(5), report.witness.S)
    assert part.k == report.witness.k
    assert report.lower >= 2


def test_adim1_rejects_bad_input():
    with pytest.raises(InvalidGraph):
        adim1_check(complete(1))
    with pytest.raises(DisconnectedGraph):
        adim1_check(build_graph(4, [(0, 1), (2, 3)]))


# ==================== ORÁCULO ====================

@pytest.mark.parametrize("g, adim", [
    (path(3), 2),
    (path(4), 1),
    (path(5), 2),
    (path(6), 1),
    (cycle(4), 2),
    (complete(5), 4),
    (star(4), 3),
    (petersen(), 3),
])
def test_oracle_adim(g, adim):
    assert adim_oracle(g).adim == adim


def test_oracle_witnesses_are_smallest():
    table = adim_oracle(cycle(4))
    assert table.witnesses[2] == (0, 2)
    assert table.adim_k[2] == 2
    assert table.adim_k[1] == 1


def test_oracle_anonymity_level():
    table = adim_oracle(petersen())
    assert table.anonymity_level(1) == 3
    assert adim_oracle(path(4)).anonymity_level(1) == 1
    assert adim_oracle(path(4)).anonymity_level(0) is None


def test_oracle_refuses_large_graphs():
    with pytest.raises(TooLarge):
        adim_oracle(path(13), limit=12)


def test_oracle_agrees_with_adim1_on_small_graphs():
    for g in (path(3), path(7), cycle(5), cycle(6), star(5), t_star()):
        assert (adim_oracle(g).adim == 1) == adim1_check(g).is_one


# ==================== COTAS ====================

def test_connectivity_eccentricity_bound():
    bound = bound_connectivity_ecc(hamming(4))
    assert bound.value == 6
    assert bound.detail == {'kappa': 6, 'ecc_count': 9}
    assert partition_by(hamming(4), bound.witness).k >= bound.value

    assert bound_connectivity_ecc(path(4)).value == 1


def test_diameter_two_bound():
    assert has_diameter_two(petersen())
    assert not has_diameter_two(complete(4))
    assert bound_diam2(path(4)) is None

    for g in (petersen(), star(5), cycle(5), hamming(3)):
        bound = bound_diam2(g)
        assert bound.value == 2
        assert partition_by(g, bound.witness).k >= 2


def test_exact_regular_diameter_two():
    assert exact_regular_diam2(hamming(3)) == 4
    assert exact_regular_diam2(petersen()) == 3
    assert exact_regular_diam2(cycle(5)) == 2
    assert exact_regular_diam2(star(4)) is None
    assert exact_regular_diam2(complete(5)) is None


def test_exact_regular_matches_oracle():
    assert adim_oracle(hamming(3)).adim == 4


# ==================== CASCADA ====================

def test_analyze_decided_by_module():
    report = analyze(star(4))
    assert report.verdict is Verdict.NOT_ONE
    assert report.decided_by == "module"
    assert report.witness.k == 3

    report = analyze(cycle(4))
    assert report.decided_by == "module"
    assert report.witness.S == (1, 3)


def test_analyze_complete_graph():
    report = analyze(complete(5))
    assert report.witness.k == 4
    assert report.lower == 4


def test_analyze_decided_by_diameter_two():
    report = analyze(petersen())
    assert report.decided_by == "diameter-two"
    assert report.exact == 3
    assert report.witness.k == 3
    assert report.upper == 3


def test_analyze_falls_through_to_adim1():
    report = analyze(path(6))
    assert report.verdict is Verdict.IS_ONE
    assert report.decided_by == "adim1"
    assert report.exact == 1

    report = analyze(path(5))
    assert report.verdict is Verdict.NOT_ONE
    assert report.decided_by == "adim1"


def test_analyze_bounds_keep_provenance():
    report = analyze(path(5))
    sources = {b.source for b in report.bounds}
    assert "trivial" in sources and "max-degree" in sources
    assert all(b.kind in (BoundKind.LOWER, BoundKind.UPPER) for b in report.bounds)
    assert report.to_dict()['verdict'] == "NOT_ONE"


def test_analyze_exact_fills_in_adim():
    report = analyze(path(5), AnalysisBudget(exact=True))
    assert report.exact == 2


def test_analyze_with_oracle_only():
    report = Analyzer(stages=[]).analyze(path(4), AnalysisBudget(exact=True))
    assert report.verdict is Verdict.IS_ONE
    assert report.decided_by == "oracle"
    assert report.exact == 1


def test_analyze_rejects_disconnected():
    with pytest.raises(DisconnectedGraph):
        analyze(build_graph(4, [(0, 1), (2, 3)]))


def test_adim1_deadline_in_the_past():
    with pytest.raises(BudgetExceeded):
        adim1_check(path(6), deadline=0.0)


def test_exhausted_budget_leaves_undecided():
    event_bus.clear_history()
    analyzer = Analyzer(stages=[Adim1Stage()])
    report = analyzer.analyze(path(6), AnalysisBudget(adim1_seconds=1e-9))
    assert report.verdict is Verdict.UNDECIDED
    assert report.witness is None
    assert report.lower == 1
    events = event_bus.get_recent_events(EventType.BUDGET_EXCEEDED)
    assert events and events[-1].data['stage'] == "adim1"
