"""
families - constructores de las familias de grafos con nombre.
"""
from .families import (
    FAMILIES,
    b_t,
    b_t_center,
    build_family,
    complete,
    cycle,
    grid,
    grid_edge_predicate,
    grid_minus_edge,
    hamming,
    path,
    petersen,
    star,
    t_star,
    t_star_times_even_path,
)

__all__ = [
    'FAMILIES',
    'b_t',
    'b_t_center',
    'build_family',
    'complete',
    'cycle',
    'grid',
    'grid_edge_predicate',
    'grid_minus_edge',
    'hamming',
    'path',
    'petersen',
    'star',
    't_star',
    't_star_times_even_path',
]
