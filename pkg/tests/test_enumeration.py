"""
Tests de forma canónica y enumeración sin isomorfos.
"""
import os
import sys

# Agregar el directorio raíz al path para importaciones
ROOT_DIR = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
if ROOT_DIR not in sys.path:
    sys.path.insert(0, ROOT_DIR)

import networkx as nx
import pytest

from graphcore import OrderTooLarge, ParameterError
from enumeration import (
    canonical_form,
    canonical_graph,
    enumerate_all,
    enumerate_connected,
    enumerate_free_trees,
)
from families import cycle, path, petersen


# ==================== FORMA CANÓNICA ====================

def test_canonical_form_ignores_labeling():
    g = petersen()
    shuffled = g.relabel([3, 7, 0, 9, 1, 5, 2, 8, 4, 6])
    assert canonical_form(g) == canonical_form(shuffled)
    assert canonical_graph(g) == canonical_graph(shuffled)


def test_canonical_form_separates_non_isomorphic_graphs():
    assert canonical_form(path(5)) != canonical_form(cycle(5))
    assert canonical_form(path(4)) != canonical_form(path(5))


def test_canonical_graph_is_isomorphic_to_input():
    g = cycle(6)
    assert nx.is_isomorphic(canonical_graph(g).to_networkx(), g.to_networkx())


def test_canonical_form_refuses_large_orders():
    with pytest.raises(OrderTooLarge):
        canonical_form(path(11))


# ==================== ENUMERACIÓN ====================

@pytest.mark.parametrize("n, count", [(2, 1), (3, 2), (4, 6), (5, 21), (6, 112)])
def test_connected_counts(n, count):
    graphs = list(enumerate_connected(n))
    assert len(graphs) == count
    assert all(g.n == n and g.is_connected() for g in graphs)


@pytest.mark.parametrize("n, count", [(1, 1), (2, 2), (3, 4), (4, 11), (5, 34)])
def test_all_counts(n, count):
    assert len(list(enumerate_all(n))) == count


@pytest.mark.slow
@pytest.mark.parametrize("n, count", [(7, 853), (8, 11117)])
def test_connected_counts_large(n, count):
    assert sum(1 for _ in enumerate_connected(n)) == count


def test_enumeration_has_no_isomorphic_duplicates():
    graphs = list(enumerate_all(4))
    keys = {canonical_form(g) for g in graphs}
    assert len(keys) == 11
    for i, a in enumerate(graphs):
        for b in graphs[i + 1:]:
            assert not nx.is_isomorphic(a.to_networkx(), b.to_networkx())


def test_enumeration_is_deterministic():
    assert list(enumerate_connected(5)) == list(enumerate_connected(5))


def test_enumeration_order_limits():
    with pytest.raises(OrderTooLarge):
        enumerate_connected(9)
    with pytest.raises(ParameterError):
        enumerate_connected(1)
    with pytest.raises(ParameterError):
        enumerate_all(0)


# ==================== ÁRBOLES LIBRES ====================

@pytest.mark.parametrize("n, count", list(zip(range(1, 11), [1, 1, 1, 2, 3, 6, 11, 23, 47, 106])))
def test_free_tree_counts(n, count):
    trees = list(enumerate_free_trees(n))
    assert len(trees) == count
    assert all(t.is_tree() for t in trees)


def test_free_tree_order_limit():
    with pytest.raises(OrderTooLarge):
        enumerate_free_trees(11)
