"""
Propiedades globales sobre familias completas de grafos pequeños: oráculo
frente a ADIM-1, cotas frente al oráculo, particiones, distancias e
intervalos, leyes de distancia y conectividad en productos, árboles, modelos
aleatorios, listas de aristas y graph6 ida y vuelta.

Las comprobaciones con datos externos se saltan salvo que la variable de
entorno correspondiente apunte a un fichero:
    ANTIDIM_ORDER9_GRAPH6  - salida de `geng -c 9`
    ANTIDIM_SNAP_EDGES     - lista de aristas SNAP con n >= 1000
"""
import os
import sys
from itertools import product as pairs

# Agregar el directorio raíz al path para importaciones
ROOT_DIR = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
if ROOT_DIR not in sys.path:
    sys.path.insert(0, ROOT_DIR)

import networkx as nx
import numpy as np
import pytest

from graphcore import DistanceOracle, distances_from, ecc_profile, interval, vertex_connectivity
from antiresolve import (
    AnalysisBudget,
    BoundKind,
    Verdict,
    adim1_check,
    adim_oracle,
    analyze,
    has_diameter_two,
    partition_by,
)
from structure import find_nontrivial_module, tree_adim1_check
from products import (
    ProductKind,
    ProductSpec,
    connectivity_formula,
    lexicographic_bound,
    product,
    strong_product_bound,
)
from enumeration import canonical_form, enumerate_connected, enumerate_free_trees
from families import complete, cycle, path, star
from ingest import parse_edge_list, parse_graph6, read_graph6_stream, write_graph6
from randgen import RandomModelConfig, generate
from experiments import ClassificationOptions, audit_file, classify_stream


def _connected_up_to(n):
    for order in range(2, n + 1):
        yield from enumerate_connected(order)


def _random_connected(count, max_order, seed):
    graphs = []
    for index in range(count):
        n = 4 + index % (max_order - 3)
        g = generate(RandomModelConfig(model="gnp", n=n, p=0.45, seed=seed), index)
        if g.is_connected():
            graphs.append(g)
    return graphs


def _check_bounds_against_oracle(g):
    adim = adim_oracle(g).adim
    if has_diameter_two(g):
        assert adim >= 2
    kappa = vertex_connectivity(g)
    ecc_count = ecc_profile(g).ecc_count
    assert adim >= min(kappa, ecc_count)
    module = find_nontrivial_module(g)
    if module.module:
        assert adim >= len(module.module)
    if adim == 1 and kappa >= 2:
        assert ecc_count == 1
    assert 1 <= adim <= g.max_degree

    report = analyze(g)
    for bound in report.bounds:
        if bound.kind is BoundKind.LOWER:
            assert bound.value <= adim
        else:
            assert bound.value >= adim
    if report.verdict is Verdict.NOT_ONE:
        assert partition_by(g, report.witness.S).k == report.witness.k <= adim


# ==================== ORÁCULO FRENTE A ADIM-1 ====================

def test_adim1_matches_oracle_up_to_order_six():
    for g in _connected_up_to(6):
        assert adim1_check(g).is_one == (adim_oracle(g).adim == 1), write_graph6(g)


@pytest.mark.slow
def test_adim1_matches_oracle_order_seven():
    for g in enumerate_connected(7):
        assert adim1_check(g).is_one == (adim_oracle(g).adim == 1), write_graph6(g)


# ==================== COTAS FRENTE AL ORÁCULO ====================

def test_bounds_hold_up_to_order_six():
    for g in _connected_up_to(6):
        _check_bounds_against_oracle(g)


def test_bounds_hold_on_random_graphs():
    for g in _random_connected(60, 9, seed=17):
        _check_bounds_against_oracle(g)


@pytest.mark.slow
def test_bounds_hold_on_order_seven_and_many_random_graphs():
    for g in enumerate_connected(7):
        _check_bounds_against_oracle(g)
    for g in _random_connected(1000, 10, seed=23):
        _check_bounds_against_oracle(g)


# ==================== PRODUCTOS ====================

def _factor_pairs():
    factors = list(_connected_up_to(4))
    return list(pairs(factors, factors))


def test_cartesian_and_strong_distance_laws():
    for G, H in _factor_pairs():
        dG, dH = DistanceOracle(G), DistanceOracle(H)
        for kind, law in ((ProductKind.CARTESIAN, lambda a, b: a + b), (ProductKind.STRONG, max)):
            spec = ProductSpec(kind=kind, first=G, second=H)
            dP = DistanceOracle(product(spec))
            for u in range(spec.order):
                g, h = spec.coordinates(u)
                row = dP.row(u)
                for v in range(spec.order):
                    g2, h2 = spec.coordinates(v)
                    assert row[v] == law(dG.distance(g, g2), dH.distance(h, h2))


def test_strong_product_bound_against_oracle():
    factors = [path(2), path(3), cycle(3), star(4), path(4)]
    for G, H in pairs(factors, factors):
        if G.n * H.n > 12:
            continue
        bound = strong_product_bound(G, H)
        assert adim_oracle(product(ProductSpec(kind=ProductKind.STRONG, first=G, second=H))).adim >= bound.value


@pytest.mark.slow
def test_strong_product_bound_against_oracle_exhaustive():
    for G, H in _factor_pairs():
        if G.n * H.n > 12:
            continue
        bound = strong_product_bound(G, H)
        assert adim_oracle(product(ProductSpec(kind=ProductKind.STRONG, first=G, second=H))).adim >= bound.value


def test_lexicographic_witness_partition():
    seconds = [path(1), path(2), complete(3), path(3)]
    for G in _connected_up_to(5):
        for H in seconds:
            bound = lexicographic_bound(G, H)
            g = product(ProductSpec(kind=ProductKind.LEXICOGRAPHIC, first=G, second=H))
            assert partition_by(g, bound.witness).k >= bound.value


# ==================== PARTICIÓN Y DISTANCIAS ====================

def test_partition_ignores_the_order_of_S():
    rng = np.random.default_rng(5)
    for g in list(_connected_up_to(5)) + _random_connected(20, 8, seed=31):
        for size in range(1, g.n):
            S = [int(v) for v in rng.choice(g.n, size=size, replace=False)]
            base = partition_by(g, S)
            for order in (S[::-1], [int(v) for v in rng.permutation(S)]):
                other = partition_by(g, order)
                assert other.classes == base.classes
                assert other.k == base.k
            reversed_ = partition_by(g, S[::-1])
            assert reversed_.representations == tuple(r[::-1] for r in base.representations)


def test_bfs_distances_match_floyd_warshall():
    for g in list(_connected_up_to(5)) + _random_connected(40, 8, seed=41):
        table = nx.floyd_warshall(g.to_networkx())
        for u in g.vertices:
            row = distances_from(g, u)
            assert all(row[v] == table[u][v] for v in g.vertices)


def test_intervals_are_symmetric_and_nested():
    for g in list(_connected_up_to(5)) + _random_connected(20, 8, seed=43):
        for u in g.vertices:
            for v in g.vertices:
                between = interval(g, u, v)
                assert between == interval(g, v, u)
                assert {u, v} <= between
                for w in between:
                    assert interval(g, u, w) <= between


# ==================== CONECTIVIDAD DEL PRODUCTO CARTESIANO ====================

def test_cartesian_connectivity_formula():
    for G, H in _factor_pairs():
        g = product(ProductSpec(kind=ProductKind.CARTESIAN, first=G, second=H))
        assert connectivity_formula(G, H) == vertex_connectivity(g)


# ==================== ÁRBOLES ====================

def _check_tree_witnesses_are_connected(t):
    for k, S in adim_oracle(t).witnesses.items():
        if k >= 2:
            sub, _ = t.induced_subgraph(S)
            assert sub.is_connected(), (write_graph6(t), S)


def test_tree_antiresolving_sets_are_connected_up_to_order_eight():
    for n in range(2, 9):
        for t in enumerate_free_trees(n):
            _check_tree_witnesses_are_connected(t)


@pytest.mark.slow
def test_tree_antiresolving_sets_are_connected_order_nine():
    for t in enumerate_free_trees(9):
        _check_tree_witnesses_are_connected(t)


def test_tree_check_matches_adim1_up_to_order_ten():
    for n in range(2, 11):
        for t in enumerate_free_trees(n):
            assert tree_adim1_check(t).holds == adim1_check(t).is_one, write_graph6(t)


# ==================== MODELOS ALEATORIOS ====================

def test_gnp_mean_edge_count():
    draws, n, p = 10_000, 10, 0.3
    cfg = RandomModelConfig(model="gnp", n=n, p=p, seed=7)
    counts = np.array([generate(cfg, i).edge_count for i in range(draws)])
    slots = n * (n - 1) // 2
    stderr = np.sqrt(slots * p * (1 - p) / draws)
    assert abs(counts.mean() - p * slots) < 4 * stderr


def test_barabasi_albert_has_heavier_degree_tail_than_gnm():
    draws = 1000
    ba = RandomModelConfig(model="ba", n=100, m=2, seed=11)
    # K_3 inicial + 97 pasos de 2 aristas
    same_size = RandomModelConfig(model="gnm", n=100, m=197, seed=13)
    ba_max = np.array([generate(ba, i).max_degree for i in range(draws)])
    gnm_max = np.array([generate(same_size, i).max_degree for i in range(draws)])
    assert generate(ba, 0).edge_count == 197
    assert np.median(ba_max) > np.median(gnm_max)


# ==================== LISTAS DE ARISTAS ====================

def test_edge_list_ignores_line_order_and_pair_direction():
    lines = ["a b", "b c", "c d", "d a", "a c", "e a", "b e"]
    rng = np.random.default_rng(3)
    base = parse_edge_list(lines)
    expected = {frozenset(e) for e in base.labeled_edges()}
    for _ in range(10):
        shuffled = [lines[i] for i in rng.permutation(len(lines))]
        flipped = [" ".join(line.split()[::-1]) if rng.random() < 0.5 else line for line in shuffled]
        for variant in (shuffled, flipped, flipped + shuffled):
            lg = parse_edge_list(variant)
            assert {frozenset(e) for e in lg.labeled_edges()} == expected
            assert canonical_form(lg.graph) == canonical_form(base.graph)


# ==================== GRAPH6 ====================

def test_graph6_round_trip_up_to_order_six():
    for g in _connected_up_to(6):
        assert parse_graph6(write_graph6(g)) == g


@pytest.mark.slow
def test_graph6_round_trip_orders_seven_and_eight():
    for n in (7, 8):
        for g in enumerate_connected(n):
            assert parse_graph6(write_graph6(g)) == g


# ==================== DATOS EXTERNOS ====================

@pytest.mark.slow
@pytest.mark.skipif(not os.getenv("ANTIDIM_ORDER9_GRAPH6"), reason="ANTIDIM_ORDER9_GRAPH6 not set")
def test_order_nine_stream():
    with open(os.environ["ANTIDIM_ORDER9_GRAPH6"], "rb") as f:
        rows = classify_stream(read_graph6_stream(f), ClassificationOptions(workers=4, chunksize=512))
    row = rows[0]
    assert row.order == 9
    assert row.found == 110
    assert row.found_geodetic == 6
    assert set(row.connectivity) == {1}
    assert row.max_density_str == "0.38"


@pytest.mark.slow
@pytest.mark.skipif(not os.getenv("ANTIDIM_SNAP_EDGES"), reason="ANTIDIM_SNAP_EDGES not set")
def test_real_network_is_not_one():
    audit = audit_file(os.environ["ANTIDIM_SNAP_EDGES"], budget=AnalysisBudget(adim1_seconds=600))
    assert audit.n >= 1000
    assert audit.verdict == "NOT_ONE"
