"""
Pipeline de análisis: filtros baratos primero, ADIM-1 después y oráculo
sólo para grafos diminutos.

Orden de etapas:
    1. ModuleStage       - gemelos (O(m)) y, si n es pequeño, cierre de pares
    2. DiameterTwoStage  - diam(G) = 2 (+ corolario regular exacto)
    3. ConnectivityEccStage - min{κ, #ε} cuando κ >= 2
    4. Adim1Stage        - algoritmo ADIM-1 con presupuesto de tiempo
    5. OracleStage       - fuerza bruta si n <= oracle_limit

La cascada se detiene en cuanto el veredicto queda decidido; cada cota que
dispara se registra con su procedencia.
"""
import time
from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import List, Optional

from pydantic import BaseModel, Field

from graphcore import (
    BudgetExceeded,
    DisconnectedGraph,
    DistanceOracle,
    Graph,
    InvalidGraph,
    vertex_connectivity,
)
from structure import find_nontrivial_module, largest_twin_class
from events import on_budget_exceeded
from utils.settings import get_settings

from antiresolve.adim1 import adim1_check
from antiresolve.bounds import bound_connectivity_ecc, bound_diam2, regular_diam2_bound
from antiresolve.oracle import adim_oracle
from antiresolve.partition import partition_by
from antiresolve.report import (
    SOURCE_MAX_DEGREE,
    SOURCE_MODULE,
    SOURCE_ORACLE,
    SOURCE_TRIVIAL,
    AdimReport,
    BoundKind,
    Verdict,
    Witness,
)


class AnalysisBudget(BaseModel):
    """
    Effort policy for analyze().

    Attributes:
        oracle_limit: Max order for the brute-force oracle.
        exact: Run the oracle after the verdict to fill in the exact Adim (tiny graphs only).
        adim1_seconds: Wall-time budget for ADIM-1 (None = unbounded).
        module_limit: Max order for the pair-closure module scan (twins are always checked).
        bound_limit: Max order for the κ / #ε stage and the regular corollary.
    """
    oracle_limit: int = Field(default_factory=lambda: get_settings().oracle_limit, ge=1)
    exact: bool = False
    adim1_seconds: Optional[float] = Field(default=None, gt=0)
    module_limit: int = Field(default=150, ge=0)
    bound_limit: int = Field(default=400, ge=0)


@dataclass
class AnalysisContext:
    """Shared state of one analyze() run."""
    graph: Graph
    oracle: DistanceOracle
    budget: AnalysisBudget
    report: AdimReport
    started: float

    @property
    def decided(self) -> bool:
        return self.report.verdict is not Verdict.UNDECIDED

    def decide_not_one(self, stage: str, S, k: int) -> None:
        self.report.verdict = Verdict.NOT_ONE
        self.report.witness = Witness(tuple(sorted(S)), k)
        self.report.decided_by = stage


class AnalysisStage(ABC):
    """
    One step of the cascade. Subclasses decide whether they apply to the
    graph at hand and, when run, either settle the verdict or only add bounds.
    """
    name: str = ""

    @abstractmethod
    def applies(self, ctx: AnalysisContext) -> bool:
        pass

    @abstractmethod
    def run(self, ctx: AnalysisContext) -> None:
        pass


class ModuleStage(AnalysisStage):
    """A module M with 1 < |M| < n gives Adim >= |M| with witness S = V∖M."""
    name = SOURCE_MODULE

    def applies(self, ctx: AnalysisContext) -> bool:
        return ctx.graph.n >= 3

    def run(self, ctx: AnalysisContext) -> None:
        g = ctx.graph
        module = None
        twins = largest_twin_class(g)
        if twins is not None:
            # Todo subconjunto de una clase de gemelos es un módulo
            module = twins if len(twins) < g.n else twins[:-1]
        if (module is None or len(module) < 2) and g.n <= ctx.budget.module_limit:
            found = find_nontrivial_module(g)
            module = tuple(sorted(found.module)) if found.module else None
        if module is None or len(module) < 2:
            return
        ctx.report.add(BoundKind.LOWER, len(module), SOURCE_MODULE)
        outside = set(range(g.n)) - set(module)
        ctx.decide_not_one(self.name, outside, len(module))


class DiameterTwoStage(AnalysisStage):
    """diam(G) = 2 gives Adim >= 2; κ-regular with κ <= (n-1)/2 gives Adim = κ."""
    name = "diameter-two"

    def applies(self, ctx: AnalysisContext) -> bool:
        return ctx.graph.n >= 3

    def run(self, ctx: AnalysisContext) -> None:
        bound = bound_diam2(ctx.graph, ctx.oracle)
        if bound is None:
            return
        ctx.report.add(BoundKind.LOWER, bound.value, bound.source)
        witness = bound.witness
        k = partition_by(ctx.graph, witness, ctx.oracle).k

        if ctx.graph.n <= ctx.budget.bound_limit:
            exact = regular_diam2_bound(ctx.graph, ctx.oracle)
            if exact is not None:
                ctx.report.add(BoundKind.LOWER, exact.value, exact.source)
                ctx.report.add(BoundKind.UPPER, exact.value, exact.source)
                ctx.report.exact = exact.value
                witness, k = exact.witness, exact.value
        ctx.decide_not_one(self.name, witness, k)


class ConnectivityEccStage(AnalysisStage):
    """Adim >= min{κ, #ε}; only useful when κ >= 2."""
    name = "connectivity-eccentricity"

    def applies(self, ctx: AnalysisContext) -> bool:
        return 2 <= ctx.graph.n <= ctx.budget.bound_limit

    def run(self, ctx: AnalysisContext) -> None:
        kappa = vertex_connectivity(ctx.graph)
        if kappa < 2:
            return
        bound = bound_connectivity_ecc(ctx.graph, ctx.oracle, kappa=kappa)
        if bound.value < 2:
            return
        ctx.report.add(BoundKind.LOWER, bound.value, bound.source)
        k = partition_by(ctx.graph, bound.witness, ctx.oracle).k
        ctx.decide_not_one(self.name, bound.witness, k)


class Adim1Stage(AnalysisStage):
    name = "adim1"

    def applies(self, ctx: AnalysisContext) -> bool:
        return True

    def run(self, ctx: AnalysisContext) -> None:
        deadline = None
        if ctx.budget.adim1_seconds is not None:
            deadline = ctx.started + ctx.budget.adim1_seconds
        try:
            result = adim1_check(ctx.graph, ctx.oracle, deadline)
        except BudgetExceeded:
            on_budget_exceeded(self.name, time.perf_counter() - ctx.started)
            return
        for bound in result.bounds:
            ctx.report.add(bound.kind, bound.value, bound.source)
        ctx.report.verdict = result.verdict
        ctx.report.witness = result.witness
        ctx.report.decided_by = self.name
        if result.exact is not None:
            ctx.report.exact = result.exact


class OracleStage(AnalysisStage):
    name = SOURCE_ORACLE

    def applies(self, ctx: AnalysisContext) -> bool:
        return ctx.graph.n <= ctx.budget.oracle_limit

    def run(self, ctx: AnalysisContext) -> None:
        table = adim_oracle(ctx.graph, limit=ctx.budget.oracle_limit)
        ctx.report.add(BoundKind.LOWER, table.adim, SOURCE_ORACLE)
        ctx.report.add(BoundKind.UPPER, table.adim, SOURCE_ORACLE)
        ctx.report.exact = table.adim
        if ctx.decided:
            return
        ctx.report.decided_by = self.name
        if table.adim == 1:
            ctx.report.verdict = Verdict.IS_ONE
        else:
            ctx.decide_not_one(self.name, table.witnesses[table.adim], table.adim)


class Analyzer:
    """
    Runs the stage cascade on one graph.

    Stages can be replaced for experiments (e.g. ADIM-1 only) by passing
    a custom list.
    """

    def __init__(self, stages: Optional[List[AnalysisStage]] = None):
        self.stages = stages if stages is not None else [
            ModuleStage(),
            DiameterTwoStage(),
            ConnectivityEccStage(),
            Adim1Stage(),
            OracleStage(),
        ]

    def analyze(
        self,
        g: Graph,
        budget: Optional[AnalysisBudget] = None,
        oracle: Optional[DistanceOracle] = None,
    ) -> AdimReport:
        if g.n < 2:
            raise InvalidGraph("analysis needs at least two vertices")
        if not g.is_connected():
            raise DisconnectedGraph("analysis needs a connected graph")
        budget = budget or AnalysisBudget()
        report = AdimReport(Verdict.UNDECIDED)
        report.add(BoundKind.LOWER, 1, SOURCE_TRIVIAL)
        report.add(BoundKind.UPPER, g.max_degree, SOURCE_MAX_DEGREE)
        ctx = AnalysisContext(
            graph=g,
            oracle=oracle or DistanceOracle(g),
            budget=budget,
            report=report,
            started=time.perf_counter(),
        )

        for stage in self.stages:
            if ctx.decided:
                break
            if stage.applies(ctx):
                stage.run(ctx)

        if budget.exact and report.exact is None:
            final = OracleStage()
            if final.applies(ctx):
                final.run(ctx)

        report.elapsed = time.perf_counter() - ctx.started
        return report


def analyze(
    g: Graph,
    budget: Optional[AnalysisBudget] = None,
    oracle: Optional[DistanceOracle] = None,
) -> AdimReport:
    """
    Cheapest-first verdict on Adim(G) = 1.

    Args:
        g: Connected graph with at least two vertices.
        budget: Effort policy; defaults from settings.
        oracle: Optional shared distance cache.

    Returns:
        AdimReport; verdict UNDECIDED only when the ADIM-1 budget ran out.

    Raises:
        DisconnectedGraph: g is not connected.
    """
    return Analyzer().analyze(g, budget, oracle)
