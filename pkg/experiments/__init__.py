"""
experiments - clasificación exhaustiva, barridos aleatorios y auditorías
de redes reales.
"""
from .classification import ClassificationOptions, classify_order, classify_stream
from .sweeps import run_manifest, sweep
from .audits import audit_file, audit_network

__all__ = [
    'ClassificationOptions',
    'classify_order',
    'classify_stream',
    'run_manifest',
    'sweep',
    'audit_file',
    'audit_network',
]
