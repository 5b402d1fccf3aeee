"""
antiresolve - particiones métricas, conjuntos k-antirresolventes,
algoritmo ADIM-1, oráculo exhaustivo y cotas de Adim(G).
"""
from .partition import MetricPartition, partition_by
from .report import AdimReport, AdimTable, Bound, BoundKind, Verdict, Witness
from .adim1 import adim1_check
from .oracle import adim_oracle
from .bounds import (
    LowerBound,
    bound_connectivity_ecc,
    bound_diam2,
    exact_regular_diam2,
    has_diameter_two,
    regular_diam2_bound,
)
from .analysis import (
    Adim1Stage,
    AnalysisBudget,
    AnalysisContext,
    AnalysisStage,
    Analyzer,
    ConnectivityEccStage,
    DiameterTwoStage,
    ModuleStage,
    OracleStage,
    analyze,
)

__all__ = [
    'MetricPartition',
    'partition_by',
    'AdimReport',
    'AdimTable',
    'Bound',
    'BoundKind',
    'Verdict',
    'Witness',
    'adim1_check',
    'adim_oracle',
    'LowerBound',
    'bound_connectivity_ecc',
    'bound_diam2',
    'exact_regular_diam2',
    'has_diameter_two',
    'regular_diam2_bound',
    'Adim1Stage',
    'AnalysisBudget',
    'AnalysisContext',
    'AnalysisStage',
    'Analyzer',
    'ConnectivityEccStage',
    'DiameterTwoStage',
    'ModuleStage',
    'OracleStage',
    'analyze',
]
