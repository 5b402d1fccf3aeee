"""
Condiciones necesarias para grafos bloque 1-métricos antidimensionales.

Si alguna de las cuatro condiciones falla, Adim(G) >= 2 de forma concluyente;
que todas se cumplan no basta (B_t con t par).
"""
from dataclasses import dataclass

from graphcore import (
    DistanceOracle,
    Graph,
    InvalidGraph,
    NotBlockGraph,
    biconnected_blocks,
    cut_vertices,
    is_block_graph,
)

from structure.modules import find_nontrivial_module


@dataclass(frozen=True)
class BlockChecklist:
    """
    Attributes:
        diameter_odd: diam(G) is odd.
        prime: No nontrivial module (in particular no twins).
        one_non_cut_per_block: Each block has at most one vertex that is not a cut vertex.
        pendant_blocks_are_edges: Each block with exactly one cut vertex is K_2.
    """
    diameter_odd: bool
    prime: bool
    one_non_cut_per_block: bool
    pendant_blocks_are_edges: bool

    @property
    def all_hold(self) -> bool:
        return (
            self.diameter_odd
            and self.prime
            and self.one_non_cut_per_block
            and self.pendant_blocks_are_edges
        )

    def to_dict(self) -> dict:
        return {
            'diameter_odd': self.diameter_odd,
            'prime': self.prime,
            'one_non_cut_per_block': self.one_non_cut_per_block,
            'pendant_blocks_are_edges': self.pendant_blocks_are_edges,
            'all_hold': self.all_hold,
        }


def block_graph_necessary(g: Graph) -> BlockChecklist:
    """
    Evaluates the four necessary conditions on a block graph with n >= 3.

    Raises:
        NotBlockGraph: g is disconnected or has a non-complete block.
        InvalidGraph: n < 3 (K_2 is 1-metric antidimensional with two non-cut vertices).
    """
    if g.n < 3:
        raise InvalidGraph("block conditions apply to graphs with at least three vertices")
    if not is_block_graph(g):
        raise NotBlockGraph("some block is not a complete graph")

    oracle = DistanceOracle(g)
    diameter = max(oracle.eccentricity(v) for v in range(g.n))
    cuts = cut_vertices(g)
    blocks = biconnected_blocks(g)

    return BlockChecklist(
        diameter_odd=diameter % 2 == 1,
        prime=find_nontrivial_module(g).is_prime,
        one_non_cut_per_block=all(len(block - cuts) <= 1 for block in blocks),
        pendant_blocks_are_edges=all(
            len(block) == 2 for block in blocks if len(block & cuts) == 1
        ),
    )
