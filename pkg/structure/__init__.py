"""
structure - caracterizaciones estructurales: módulos y gemelos, factor de
equilibrio en árboles, grafos geodésicos y grafos bloque.
"""
from .modules import (
    ModuleKind,
    ModuleWitness,
    find_nontrivial_module,
    find_twins,
    is_module,
    largest_proper_module_size,
    largest_twin_class,
    twin_classes,
)
from .trees import BranchProfile, TreeCheck, balancing_factor, tree_adim1_check
from .geodetic import RootedSPTree, geodetic_adim1_check, is_geodetic, sp_tree, violating_roots
from .blocks import BlockChecklist, block_graph_necessary

__all__ = [
    'ModuleKind',
    'ModuleWitness',
    'find_nontrivial_module',
    'find_twins',
    'is_module',
    'largest_proper_module_size',
    'largest_twin_class',
    'twin_classes',
    'BranchProfile',
    'TreeCheck',
    'balancing_factor',
    'tree_adim1_check',
    'RootedSPTree',
    'geodetic_adim1_check',
    'is_geodetic',
    'sp_tree',
    'violating_roots',
    'BlockChecklist',
    'block_graph_necessary',
]
