"""
graphcore - sustrato métrico: grafo, distancias, excentricidades,
conectividad, intervalos y conteo de caminos mínimos.
"""
from .errors import (
    AntidimError,
    BadHeader,
    BudgetExceeded,
    DisconnectedGraph,
    EdgeListError,
    EmptySet,
    FactorTooSmall,
    FullSet,
    Graph6Error,
    InvalidGraph,
    NotATree,
    NotBlockGraph,
    NotGeodetic,
    OrderTooLarge,
    ParameterError,
    TooLarge,
    TrailingGarbage,
    TruncatedBits,
)
from .graph import Graph, build_graph
from .distances import (
    UNREACHABLE,
    DistanceOracle,
    EccProfile,
    diameter_exceeds,
    distances_from,
    ecc_profile,
)
from .connectivity import biconnected_blocks, cut_vertices, is_block_graph, vertex_connectivity
from .paths import count_shortest_paths, has_geodetic_number_two, interval

__all__ = [
    'AntidimError',
    'BadHeader',
    'BudgetExceeded',
    'DisconnectedGraph',
    'EdgeListError',
    'EmptySet',
    'FactorTooSmall',
    'FullSet',
    'Graph6Error',
    'InvalidGraph',
    'NotATree',
    'NotBlockGraph',
    'NotGeodetic',
    'OrderTooLarge',
    'ParameterError',
    'TooLarge',
    'TrailingGarbage',
    'TruncatedBits',
    'Graph',
    'build_graph',
    'UNREACHABLE',
    'DistanceOracle',
    'EccProfile',
    'diameter_exceeds',
    'distances_from',
    'ecc_profile',
    'biconnected_blocks',
    'cut_vertices',
    'is_block_graph',
    'vertex_connectivity',
    'count_shortest_paths',
    'has_geodetic_number_two',
    'interval',
]
