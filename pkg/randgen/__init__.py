"""
randgen - generadores aleatorios sembrados y manifiestos de barrido.
"""
from .config import RandomModel, RandomModelConfig, SweepManifest
from .generators import (
    barabasi_albert,
    connectivity_threshold_p,
    derive_seed,
    generate,
    gnm,
    gnp,
)

__all__ = [
    'RandomModel',
    'RandomModelConfig',
    'SweepManifest',
    'barabasi_albert',
    'connectivity_threshold_p',
    'derive_seed',
    'generate',
    'gnm',
    'gnp',
]
