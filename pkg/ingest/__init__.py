"""
ingest - codec graph6, listas de aristas y componente conexa mayor.
"""
from .graph6 import GRAPH6_HEADER, Graph6Reader, parse_graph6, read_graph6_stream, write_graph6
from .edgelist import (
    EdgeListOptions,
    LabeledGraph,
    format_edge_list,
    largest_component,
    load_edge_list,
    parse_edge_list,
)

__all__ = [
    'GRAPH6_HEADER',
    'Graph6Reader',
    'parse_graph6',
    'read_graph6_stream',
    'write_graph6',
    'EdgeListOptions',
    'LabeledGraph',
    'format_edge_list',
    'largest_component',
    'load_edge_list',
    'parse_edge_list',
]
