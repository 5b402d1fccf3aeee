"""
Asesor de endurecimiento: propone embeber G en productos G * H que ocultan
la propiedad Adim(G) = 1.

Orden: producto fuerte (garantía más fuerte), lexicográfico (cota escalada
por el módulo), cartesiano al final con sus advertencias. Cada cota se
verifica con el oráculo cuando el producto tiene pocos vértices.
"""
from dataclasses import dataclass, field
from enum import Enum
from typing import List, Optional, Sequence, Tuple

from graphcore import DisconnectedGraph, Graph, TooLarge
from antiresolve import adim1_check, adim_oracle, Verdict
from utils.utils import Utils

from products.bounds import (
    ProductBound,
    cartesian_bound_ecc,
    cartesian_bound_geodetic2,
    lexicographic_bound,
    strong_product_bound,
)
from products.products import ProductKind, ProductSpec, product


class AdviceStatus(str, Enum):
    VERIFIED = "VERIFIED"
    CERTIFIED_ONLY = "CERTIFIED_ONLY"
    UNSAFE = "UNSAFE"


CARTESIAN_WARNING = (
    "Cartesian products may stay 1-metric antidimensional: Adim(T* □ P_2n) = 1 "
    "for the order-7 tree T*; only entries with a firing rule carry a guarantee."
)

_KIND_ORDER = {ProductKind.STRONG: 0, ProductKind.LEXICOGRAPHIC: 1, ProductKind.CARTESIAN: 2}


@dataclass(frozen=True)
class AdviceEntry:
    """
    One candidate construction.

    Attributes:
        construction: Product kind.
        factor: Name of the second factor.
        bound: Guaranteed lower bound on Adim (1 when nothing is guaranteed).
        source: Provenance tag of the bound.
        witness: Flat ids of the witness set, when any.
        status: VERIFIED, CERTIFIED_ONLY or UNSAFE.
        product_order: n(G) * n(H).
        added_vertices: product_order - n(G).
    """
    construction: ProductKind
    factor: str
    bound: int
    source: str
    witness: Tuple[int, ...]
    status: AdviceStatus
    product_order: int
    added_vertices: int

    @property
    def verified(self) -> bool:
        return self.status is AdviceStatus.VERIFIED

    def rank_key(self):
        return (
            self.status is AdviceStatus.UNSAFE,
            -self.bound,
            self.added_vertices,
            _KIND_ORDER[self.construction],
        )

    def to_dict(self) -> dict:
        return {
            'construction': self.construction.value,
            'factor': self.factor,
            'bound': self.bound,
            'theorem': self.source,
            'verified': self.verified,
            'status': self.status.value,
            'witness': list(self.witness),
            'product_order': self.product_order,
        }


@dataclass
class HardeningAdvice:
    entries: List[AdviceEntry] = field(default_factory=list)
    warnings: List[str] = field(default_factory=list)

    def to_records(self) -> List[dict]:
        return [entry.to_dict() for entry in self.entries]


class HardeningAdvisor:
    """
    Evaluates every (construction, factor) pair of a catalog.

    Args:
        verify_limit: Products up to this order are checked with the oracle.
        adim1_limit: Cartesian products without a firing rule are checked with
            ADIM-1 up to this order; larger ones are reported UNSAFE.
    """

    def __init__(self, verify_limit: int = 12, adim1_limit: int = 400):
        self.verify_limit = verify_limit
        self.adim1_limit = adim1_limit

    def _verify(self, spec: ProductSpec, bound: ProductBound) -> AdviceStatus:
        if spec.order > self.verify_limit:
            return AdviceStatus.CERTIFIED_ONLY
        try:
            table = adim_oracle(product(spec), limit=self.verify_limit)
        except TooLarge:
            return AdviceStatus.CERTIFIED_ONLY
        if table.adim < bound.value:
            # Una cota certificada nunca debería fallar aquí
            Utils.log("Harden", f"❌ {spec.kind.value} bound {bound.value} not met (oracle Adim {table.adim})")
            return AdviceStatus.UNSAFE
        return AdviceStatus.VERIFIED

    def _entry(self, G: Graph, spec: ProductSpec, name: str, bound: Optional[ProductBound]) -> AdviceEntry:
        if bound is not None:
            status = self._verify(spec, bound)
            value, source, witness = bound.value, bound.source, bound.witness
        else:
            value, source, witness = 1, "none", ()
            status = AdviceStatus.UNSAFE
            if spec.order <= self.adim1_limit:
                report = adim1_check(product(spec))
                if report.verdict is Verdict.NOT_ONE:
                    value, source, witness = report.witness.k, "adim1", report.witness.S
                    status = AdviceStatus.VERIFIED
        return AdviceEntry(
            construction=spec.kind,
            factor=name,
            bound=value,
            source=source,
            witness=tuple(witness),
            status=status,
            product_order=spec.order,
            added_vertices=spec.order - G.n,
        )

    def advise(self, g: Graph, catalog: Sequence[Tuple[str, Graph]]) -> HardeningAdvice:
        if not g.is_connected():
            raise DisconnectedGraph("hardening needs a connected graph")
        advice = HardeningAdvice(warnings=[CARTESIAN_WARNING])
        for name, H in catalog:
            if H.n >= 2 and g.n >= 2 and H.is_connected():
                spec = ProductSpec(kind=ProductKind.STRONG, first=g, second=H)
                advice.entries.append(self._entry(g, spec, name, strong_product_bound(g, H)))
            if g.n >= 2 and H.n >= 1:
                spec = ProductSpec(kind=ProductKind.LEXICOGRAPHIC, first=g, second=H)
                advice.entries.append(self._entry(g, spec, name, lexicographic_bound(g, H)))
            if H.n >= 2 and H.is_connected():
                spec = ProductSpec(kind=ProductKind.CARTESIAN, first=g, second=H)
                bound = cartesian_bound_ecc(g, H) or cartesian_bound_geodetic2(g, H)
                entry = self._entry(g, spec, name, bound)
                if entry.status is AdviceStatus.UNSAFE:
                    Utils.log("Harden", f"⚠️ {g.n}-vertex graph {spec.kind.symbol} {name} stays 1-metric antidimensional")
                advice.entries.append(entry)
        advice.entries.sort(key=AdviceEntry.rank_key)
        return advice


def harden(g: Graph, catalog: Sequence[Tuple[str, Graph]], verify_limit: int = 12) -> HardeningAdvice:
    """
    Ranked product constructions that hide Adim(G) = 1.

    Args:
        g: Connected graph.
        catalog: Candidate second factors as (name, graph).
        verify_limit: Products up to this order are verified with the oracle.
    """
    return HardeningAdvisor(verify_limit=verify_limit).advise(g, catalog)
