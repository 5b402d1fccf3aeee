"""
Productos de grafos: cartesiano, fuerte y lexicográfico.

Índice plano fijo: el vértice (g, h) recibe el id g * n(H) + h, de modo que
los testigos son reproducibles entre ejecuciones.
"""
from enum import Enum
from typing import Tuple

import networkx as nx
from pydantic import BaseModel, ConfigDict, InstanceOf

from graphcore import Graph, ParameterError, build_graph


class ProductKind(str, Enum):
    CARTESIAN = "CARTESIAN"
    STRONG = "STRONG"
    LEXICOGRAPHIC = "LEXICOGRAPHIC"

    @property
    def symbol(self) -> str:
        return {"CARTESIAN": "□", "STRONG": "⊠", "LEXICOGRAPHIC": "∘"}[self.value]


# networkx construye los pares (g, h); aquí sólo se renumeran
_BUILDERS = {
    ProductKind.CARTESIAN: nx.cartesian_product,
    ProductKind.STRONG: nx.strong_product,
    ProductKind.LEXICOGRAPHIC: nx.lexicographic_product,
}


class ProductSpec(BaseModel):
    """
    A product G * H of the given kind.

    Attributes:
        kind: CARTESIAN, STRONG or LEXICOGRAPHIC.
        first: Factor G.
        second: Factor H.
    """
    kind: ProductKind
    first: InstanceOf[Graph]
    second: InstanceOf[Graph]

    model_config = ConfigDict(frozen=True)

    @property
    def order(self) -> int:
        return self.first.n * self.second.n

    def flat_id(self, g: int, h: int) -> int:
        return g * self.second.n + h

    def coordinates(self, v: int) -> Tuple[int, int]:
        return divmod(v, self.second.n)


def product(spec: ProductSpec) -> Graph:
    """
    Builds the product graph with flat ids g * n(H) + h.

    Raises:
        ParameterError: a factor has no vertices.
    """
    if spec.first.n == 0 or spec.second.n == 0:
        raise ParameterError("product factors must be nonempty")
    paired = _BUILDERS[spec.kind](spec.first.to_networkx(), spec.second.to_networkx())
    edges = [
        (spec.flat_id(*a), spec.flat_id(*b))
        for a, b in paired.edges()
    ]
    return build_graph(spec.order, edges)


def swap_relabeling(spec: ProductSpec) -> Tuple[int, ...]:
    """
    Flat id of (g, h) in G*H mapped to the flat id of (h, g) in H*G.

    An isomorphism G*H -> H*G only for the commutative kinds (Cartesian and
    strong); the lexicographic product is not commutative.
    """
    return tuple(
        h * spec.first.n + g
        for g in range(spec.first.n)
        for h in range(spec.second.n)
    )
