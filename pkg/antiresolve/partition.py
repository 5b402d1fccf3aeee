"""
Partición métrica de V∖S según la representación r(x|S).
"""
from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from graphcore import DisconnectedGraph, DistanceOracle, EmptySet, FullSet, Graph, InvalidGraph


@dataclass(frozen=True)
class MetricPartition:
    """
    Classes of V∖S under equal metric representation.

    Attributes:
        S: The ordered vertex set.
        classes: Each class sorted; classes ordered by smallest member.
        representations: Distance vector to S shared by each class.
        k: Smallest class size.
    """
    S: Tuple[int, ...]
    classes: Tuple[Tuple[int, ...], ...]
    representations: Tuple[Tuple[int, ...], ...]
    k: int

    @property
    def singletons(self) -> List[int]:
        return [c[0] for c in self.classes if len(c) == 1]

    def to_dict(self) -> dict:
        return {
            'S': list(self.S),
            'classes': [list(c) for c in self.classes],
            'k': self.k,
        }


def group_by_representation(
    rows: Sequence[Sequence[int]], S: Sequence[int], n: int
) -> Dict[Tuple[int, ...], List[int]]:
    """Groups V∖S by distance vector to S. No validation; rows[s] is the BFS row of s."""
    members = set(S)
    groups: Dict[Tuple[int, ...], List[int]] = {}
    for x in range(n):
        if x in members:
            continue
        key = tuple(rows[s][x] for s in S)
        groups.setdefault(key, []).append(x)
    return groups


def partition_by(g: Graph, S: Iterable[int], oracle: Optional[DistanceOracle] = None) -> MetricPartition:
    """
    Metric partition of V∖S and its k.

    Args:
        g: Connected graph.
        S: Nonempty proper vertex subset; order fixes the coordinates of the vectors.
        oracle: Optional shared distance cache.

    Raises:
        EmptySet: S is empty.
        FullSet: S covers V(G).
        DisconnectedGraph: g is not connected.
        InvalidGraph: S names a vertex outside g.
    """
    ordered = tuple(dict.fromkeys(S))
    if not ordered:
        raise EmptySet("S must contain at least one vertex")
    if any(not 0 <= s < g.n for s in ordered):
        raise InvalidGraph(f"S contains vertices outside 0..{g.n - 1}")
    if len(ordered) >= g.n:
        raise FullSet("S must leave at least one vertex outside")
    if not g.is_connected():
        raise DisconnectedGraph("metric representation needs a connected graph")
    oracle = oracle or DistanceOracle(g)
    rows = {s: oracle.row(s) for s in ordered}
    groups = group_by_representation(rows, ordered, g.n)
    ranked = sorted(groups.items(), key=lambda item: item[1][0])
    classes = tuple(tuple(members) for _, members in ranked)
    return MetricPartition(
        S=ordered,
        classes=classes,
        representations=tuple(key for key, _ in ranked),
        k=min(len(c) for c in classes),
    )
