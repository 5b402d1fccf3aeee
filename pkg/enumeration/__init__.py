"""
enumeration - forma canónica y enumeración sin isomorfos de grafos pequeños.
"""
from .canonical import CANONICAL_MAX_ORDER, canonical_form, canonical_graph, canonical_key, canonical_labeling
from .generate import (
    ENUMERATION_MAX_ORDER,
    FREE_TREE_MAX_ORDER,
    enumerate_all,
    enumerate_connected,
    enumerate_free_trees,
)

__all__ = [
    'CANONICAL_MAX_ORDER',
    'canonical_form',
    'canonical_graph',
    'canonical_key',
    'canonical_labeling',
    'ENUMERATION_MAX_ORDER',
    'FREE_TREE_MAX_ORDER',
    'enumerate_all',
    'enumerate_connected',
    'enumerate_free_trees',
]
