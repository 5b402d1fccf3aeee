"""
Cotas inferiores de Adim para productos de grafos, cada una con su
conjunto testigo en ids planos.
"""
from dataclasses import dataclass
from typing import Optional, Tuple

from graphcore import (
    DisconnectedGraph,
    FactorTooSmall,
    Graph,
    ecc_profile,
    has_geodetic_number_two,
    vertex_connectivity,
)
from structure import find_nontrivial_module

from products.products import ProductKind


SOURCE_STRONG = "strong-product"
SOURCE_LEXICOGRAPHIC = "lexicographic-module"
SOURCE_CARTESIAN_ECC = "cartesian-eccentricity"
SOURCE_CARTESIAN_GEODETIC = "cartesian-geodetic-number-two"


@dataclass(frozen=True)
class ProductBound:
    """
    Attributes:
        kind: Product the bound applies to.
        value: Guaranteed lower bound on Adim.
        source: Provenance tag.
        witness: Flat ids of a set whose partition has minimum class >= value.
    """
    kind: ProductKind
    value: int
    source: str
    witness: Tuple[int, ...]


def _require_connected(*factors: Graph) -> None:
    for factor in factors:
        if not factor.is_connected():
            raise DisconnectedGraph("product factors must be connected")


def strong_product_bound(G: Graph, H: Graph) -> ProductBound:
    """
    Adim(G ⊠ H) >= 2, and >= 3 when both orders are >= 3; any singleton
    is a witness, {(0, 0)} is returned.

    Raises:
        FactorTooSmall: a factor has fewer than two vertices.
        DisconnectedGraph: a factor is disconnected.
    """
    if G.n < 2 or H.n < 2:
        raise FactorTooSmall("strong-product bound needs factors of order >= 2")
    _require_connected(G, H)
    value = 3 if G.n >= 3 and H.n >= 3 else 2
    return ProductBound(ProductKind.STRONG, value, SOURCE_STRONG, (0,))


def lexicographic_bound(G: Graph, H: Graph) -> ProductBound:
    """
    Adim(G ∘ H) >= |M| * n(H) for the largest module M ≠ V(G), with
    witness S = V(G ∘ H) ∖ (M × V(H)). For prime G, M is the singleton {0}.

    Raises:
        FactorTooSmall: G has fewer than two vertices or H is empty.
        DisconnectedGraph: G is disconnected.
    """
    if G.n < 2 or H.n < 1:
        raise FactorTooSmall("lexicographic bound needs n(G) >= 2 and n(H) >= 1")
    _require_connected(G)
    found = find_nontrivial_module(G)
    module = found.module if found.module else frozenset({0})
    witness = tuple(
        g * H.n + h
        for g in range(G.n) if g not in module
        for h in range(H.n)
    )
    return ProductBound(ProductKind.LEXICOGRAPHIC, len(module) * H.n, SOURCE_LEXICOGRAPHIC, witness)


def cartesian_bound_ecc(G: Graph, H: Graph) -> Optional[ProductBound]:
    """
    Adim(G □ H) >= 2 when #ε(G) >= 2 or #ε(H) >= 2 (both factors of order >= 2).
    The witness is {(g, 0)} for g attaining #ε(G), or {(0, h)} symmetrically.

    Raises:
        DisconnectedGraph: a factor is disconnected.
    """
    _require_connected(G, H)
    if G.n < 2 or H.n < 2:
        return None
    ecc_g = ecc_profile(G)
    if ecc_g.ecc_count >= 2:
        return ProductBound(ProductKind.CARTESIAN, 2, SOURCE_CARTESIAN_ECC, (ecc_g.witness * H.n,))
    ecc_h = ecc_profile(H)
    if ecc_h.ecc_count >= 2:
        return ProductBound(ProductKind.CARTESIAN, 2, SOURCE_CARTESIAN_ECC, (ecc_h.witness,))
    return None


def cartesian_bound_geodetic2(G: Graph, H: Graph) -> Optional[ProductBound]:
    """
    Adim(G □ H) >= 2 when g(G) = g(H) = 2, with witness {(g, h), (g', h')}
    built from covering pairs of both factors.
    """
    if not (G.is_connected() and H.is_connected()) or G.n < 2 or H.n < 2:
        return None
    pair_g = has_geodetic_number_two(G)
    if pair_g is None:
        return None
    pair_h = has_geodetic_number_two(H)
    if pair_h is None:
        return None
    witness = tuple(sorted((pair_g[0] * H.n + pair_h[0], pair_g[1] * H.n + pair_h[1])))
    return ProductBound(ProductKind.CARTESIAN, 2, SOURCE_CARTESIAN_GEODETIC, witness)


def connectivity_formula(G: Graph, H: Graph) -> int:
    """κ(G □ H) = min{κ(G) n(H), κ(H) n(G), δ(G) + δ(H)} for factors of order >= 2."""
    if G.n < 2 or H.n < 2:
        raise FactorTooSmall("connectivity formula needs factors of order >= 2")
    return min(
        vertex_connectivity(G) * H.n,
        vertex_connectivity(H) * G.n,
        G.min_degree + H.min_degree,
    )
