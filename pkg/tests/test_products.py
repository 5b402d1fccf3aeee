"""
Tests de productos de grafos, sus cotas y el asesor de endurecimiento.
"""
import os
import sys

# Agregar el directorio raíz al path para importaciones
ROOT_DIR = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
if ROOT_DIR not in sys.path:
    sys.path.insert(0, ROOT_DIR)

import pytest

from graphcore import DisconnectedGraph, FactorTooSmall, build_graph, vertex_connectivity
from antiresolve import adim_oracle, partition_by
from families import complete, cycle, path, star, t_star
from products import (
    CARTESIAN_WARNING,
    AdviceStatus,
    ProductKind,
    ProductSpec,
    cartesian_bound_ecc,
    cartesian_bound_geodetic2,
    connectivity_formula,
    harden,
    lexicographic_bound,
    product,
    strong_product_bound,
    swap_relabeling,
)


def _spec(kind, G, H):
    return ProductSpec(kind=kind, first=G, second=H)


# ==================== PRODUCTOS ====================

def test_product_sizes():
    P2, P3 = path(2), path(3)
    assert product(_spec(ProductKind.CARTESIAN, P2, P3)).edge_count == 7
    assert product(_spec(ProductKind.STRONG, P2, P2)) == complete(4)
    assert product(_spec(ProductKind.LEXICOGRAPHIC, P2, P2)).is_complete()
    assert product(_spec(ProductKind.CARTESIAN, P2, P2)).is_regular()


def test_flat_ids():
    spec = _spec(ProductKind.CARTESIAN, path(3), path(2))
    assert spec.order == 6
    assert spec.flat_id(2, 1) == 5
    assert spec.coordinates(5) == (2, 1)
    g = product(spec)
    assert g.has_edge(spec.flat_id(0, 0), spec.flat_id(0, 1))
    assert g.has_edge(spec.flat_id(0, 0), spec.flat_id(1, 0))


@pytest.mark.parametrize("kind", [ProductKind.CARTESIAN, ProductKind.STRONG])
def test_swap_relabeling_gives_the_reversed_product(kind):
    G, H = path(3), star(4)
    spec = _spec(kind, G, H)
    mapping = swap_relabeling(spec)
    swapped = build_graph(spec.order, [(mapping[u], mapping[v]) for u, v in product(spec).edges()])
    assert swapped == product(_spec(kind, H, G))


def test_lexicographic_product_is_not_commutative():
    # P_3 o K_1,3: 3 copias de K_1,3 (9 aristas) + 2 pares completos (2 * 16)
    # K_1,3 o P_3: 4 copias de P_3 (8 aristas) + 3 pares completos (3 * 9)
    first = product(_spec(ProductKind.LEXICOGRAPHIC, path(3), star(4)))
    second = product(_spec(ProductKind.LEXICOGRAPHIC, star(4), path(3)))
    assert first.edge_count == 41
    assert second.edge_count == 35
    assert first != second


# ==================== COTAS ====================

def test_strong_product_bound():
    bound = strong_product_bound(path(3), path(3))
    assert bound.value == 3
    assert bound.witness == (0,)
    assert adim_oracle(product(_spec(ProductKind.STRONG, path(3), path(3)))).adim >= 3
    assert strong_product_bound(path(2), path(4)).value == 2
    with pytest.raises(FactorTooSmall):
        strong_product_bound(path(1), path(3))


def test_lexicographic_bound_uses_largest_module():
    bound = lexicographic_bound(path(4), complete(3))
    assert bound.value == 3
    assert bound.witness == tuple(range(3, 12))

    bound = lexicographic_bound(star(4), path(2))
    assert bound.value == 6
    g = product(_spec(ProductKind.LEXICOGRAPHIC, star(4), path(2)))
    assert partition_by(g, bound.witness).k >= 6


def test_lexicographic_bound_rejects_disconnected_factor():
    with pytest.raises(DisconnectedGraph):
        lexicographic_bound(build_graph(4, [(0, 1), (2, 3)]), path(2))


def test_cartesian_eccentricity_rule():
    bound = cartesian_bound_ecc(star(4), path(2))
    assert bound.value == 2
    assert bound.witness == (0,)
    g = product(_spec(ProductKind.CARTESIAN, star(4), path(2)))
    assert partition_by(g, bound.witness).k >= 2

    # simétrica: el factor con #ε >= 2 puede ser el segundo
    bound = cartesian_bound_ecc(path(2), star(4))
    assert bound.witness == (0,)
    assert cartesian_bound_ecc(t_star(), path(2)) is None


def test_cartesian_geodetic_number_two_rule():
    bound = cartesian_bound_geodetic2(path(2), path(2))
    assert bound.witness == (0, 3)
    g = product(_spec(ProductKind.CARTESIAN, path(2), path(2)))
    assert partition_by(g, bound.witness).k == 2
    assert cartesian_bound_geodetic2(cycle(5), path(2)) is None


def test_connectivity_formula():
    assert connectivity_formula(complete(4), complete(4)) == 6
    for G, H in ((path(3), path(4)), (cycle(4), path(2)), (star(4), cycle(3))):
        g = product(_spec(ProductKind.CARTESIAN, G, H))
        assert connectivity_formula(G, H) == vertex_connectivity(g)


# ==================== ASESOR ====================

def test_harden_t_star_with_p3_puts_strong_product_first():
    advice = harden(t_star(), [("P_3", path(3))])
    first = advice.entries[0]
    assert first.construction is ProductKind.STRONG
    assert first.bound == 3
    assert first.status is AdviceStatus.CERTIFIED_ONLY
    assert CARTESIAN_WARNING in advice.warnings


def test_harden_t_star_with_p2_flags_cartesian():
    advice = harden(t_star(), [("P_2", path(2))])
    last = advice.entries[-1]
    assert last.construction is ProductKind.CARTESIAN
    assert last.status is AdviceStatus.UNSAFE
    assert last.bound == 1
    assert all(e.status is not AdviceStatus.UNSAFE for e in advice.entries[:-1])


def test_harden_p4_with_k3_lexicographic_bound():
    advice = harden(path(4), [("K_3", complete(3))])
    lex = [e for e in advice.entries if e.construction is ProductKind.LEXICOGRAPHIC]
    assert len(lex) == 1
    assert lex[0].bound == 3
    assert lex[0].product_order == 12
    assert lex[0].status is AdviceStatus.VERIFIED


def test_harden_verifies_small_products():
    advice = harden(path(2), [("P_2", path(2))])
    assert len(advice.entries) == 3
    assert all(e.status is AdviceStatus.VERIFIED for e in advice.entries)
    records = advice.to_records()
    assert {r['construction'] for r in records} == {"STRONG", "LEXICOGRAPHIC", "CARTESIAN"}
    assert all(r['verified'] for r in records)


def test_harden_rejects_disconnected_input():
    with pytest.raises(DisconnectedGraph):
        harden(build_graph(4, [(0, 1), (2, 3)]), [("P_2", path(2))])
