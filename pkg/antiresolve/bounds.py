"""
Cotas de Adim(G) respaldadas por teoremas.

Cada cota inferior lleva un conjunto testigo S cuya partición métrica tiene
clase mínima >= valor de la cota.
"""
from dataclasses import dataclass, field
from typing import Optional, Tuple

from graphcore import (
    DisconnectedGraph,
    DistanceOracle,
    Graph,
    diameter_exceeds,
    ecc_profile,
    vertex_connectivity,
)

from antiresolve.report import (
    SOURCE_CONNECTIVITY_ECC,
    SOURCE_DIAMETER_TWO,
    SOURCE_REGULAR_DIAMETER_TWO,
)


@dataclass(frozen=True)
class LowerBound:
    """
    A certified lower bound on Adim(G).

    Attributes:
        value: The bound.
        source: Provenance tag.
        witness: Set S realizing at least `value` as minimum class size.
        detail: Quantities the bound was computed from.
    """
    value: int
    source: str
    witness: Tuple[int, ...]
    detail: dict = field(default_factory=dict, compare=False)


def _require_connected(g: Graph) -> None:
    if not g.is_connected():
        raise DisconnectedGraph("bounds need a connected graph")


def has_diameter_two(g: Graph, oracle: Optional[DistanceOracle] = None) -> bool:
    """diam(G) == 2, stopping at the first vertex of eccentricity >= 3."""
    if g.n < 3 or g.is_complete():
        return False
    return diameter_exceeds(g, 2, oracle) is None


def bound_connectivity_ecc(
    g: Graph,
    oracle: Optional[DistanceOracle] = None,
    kappa: Optional[int] = None,
) -> LowerBound:
    """
    Adim(G) >= min{κ(G), #ε(G)}, realized by the singleton {x} where x
    attains #ε(G); adim_k(G) = 1 for that k.

    Args:
        g: Connected graph with at least two vertices.
        oracle: Optional shared distance cache.
        kappa: κ(G) when already known.

    Raises:
        DisconnectedGraph: g is not connected.
    """
    _require_connected(g)
    oracle = oracle or DistanceOracle(g)
    if kappa is None:
        kappa = vertex_connectivity(g)
    profile = ecc_profile(g, oracle)
    return LowerBound(
        value=max(1, min(kappa, profile.ecc_count)),
        source=SOURCE_CONNECTIVITY_ECC,
        witness=(profile.witness,),
        detail={'kappa': kappa, 'ecc_count': profile.ecc_count},
    )


def bound_diam2(g: Graph, oracle: Optional[DistanceOracle] = None) -> Optional[LowerBound]:
    """
    Adim(G) >= 2 when diam(G) = 2, else None.

    The witness follows the constructive argument: the neighbor of a leaf
    when δ = 1; otherwise a vertex x of eccentricity 2 when |L_2(x)| >= 2,
    L_1(x) when the unique far vertex y is a twin of x, and {y} otherwise.

    Raises:
        DisconnectedGraph: g is not connected.
    """
    _require_connected(g)
    oracle = oracle or DistanceOracle(g)
    if not has_diameter_two(g, oracle):
        return None

    if g.min_degree == 1:
        leaf = next(v for v in range(g.n) if g.degree(v) == 1)
        (hub,) = g.neighbors(leaf)
        witness: Tuple[int, ...] = (hub,)
    else:
        x = next(v for v in range(g.n) if g.degree(v) < g.n - 1)
        layers = oracle.layers(x)
        near, far = layers[1], layers[2]
        if len(far) >= 2:
            witness = (x,)
        elif g.neighbors(far[0]) == g.neighbors(x):
            witness = tuple(near)
        else:
            witness = (far[0],)
    return LowerBound(value=2, source=SOURCE_DIAMETER_TWO, witness=witness)


def exact_regular_diam2(g: Graph, oracle: Optional[DistanceOracle] = None) -> Optional[int]:
    """
    Adim(G) = κ(G) for κ(G)-regular graphs of diameter 2 with κ <= (n-1)/2.

    Returns:
        κ(G) when every precondition holds, else None.

    Raises:
        DisconnectedGraph: g is not connected.
    """
    _require_connected(g)
    if not g.is_regular():
        return None
    degree = g.max_degree
    if 2 * degree > g.n - 1:
        return None
    if not has_diameter_two(g, oracle):
        return None
    kappa = vertex_connectivity(g)
    if kappa != degree:
        return None
    return kappa


def regular_diam2_bound(g: Graph, oracle: Optional[DistanceOracle] = None) -> Optional[LowerBound]:
    """exact_regular_diam2 as a bound with the singleton witness {0}."""
    kappa = exact_regular_diam2(g, oracle)
    if kappa is None:
        return None
    return LowerBound(value=kappa, source=SOURCE_REGULAR_DIAMETER_TWO, witness=(0,), detail={'kappa': kappa})
