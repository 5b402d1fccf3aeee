"""
Caracterización de árboles 1-métricos antidimensionales mediante el
factor de equilibrio ξ_T(u): un árbol T cumple Adim(T) = 1 si y sólo si
ξ_T(v) = 1 para todo vértice v.
"""
from collections import Counter, deque
from dataclasses import dataclass
from typing import Dict, Optional

from graphcore import Graph, NotATree


@dataclass(frozen=True)
class BranchProfile:
    """
    Branches of T rooted at u.

    Attributes:
        root: The vertex u.
        branch_ecc: ε of u inside each u-branch, keyed by the neighbor that starts it.
        factor: ξ_T(u), the largest number of branches sharing one eccentricity.
    """
    root: int
    branch_ecc: Dict[int, int]
    factor: int

    def to_dict(self) -> dict:
        return {
            'root': self.root,
            'branch_ecc': {str(v): e for v, e in sorted(self.branch_ecc.items())},
            'factor': self.factor,
        }


@dataclass(frozen=True)
class TreeCheck:
    holds: bool
    violating: Optional[int] = None


def require_tree(t: Graph) -> None:
    if t.n == 0 or t.edge_count != t.n - 1 or not t.is_connected():
        raise NotATree(f"graph with n={t.n}, m={t.edge_count} is not a tree")


def _branch_profile(t: Graph, u: int) -> BranchProfile:
    # BFS desde u etiquetando cada vértice con el vecino de u que abre su rama
    depth = {u: 0}
    branch_of: Dict[int, int] = {}
    queue = deque()
    for v in t.adjacency[u]:
        depth[v] = 1
        branch_of[v] = v
        queue.append(v)
    ecc = {v: 1 for v in t.adjacency[u]}
    while queue:
        x = queue.popleft()
        for w in t.adjacency[x]:
            if w not in depth:
                depth[w] = depth[x] + 1
                branch_of[w] = branch_of[x]
                ecc[branch_of[w]] = max(ecc[branch_of[w]], depth[w])
                queue.append(w)
    factor = max(Counter(ecc.values()).values(), default=1)
    return BranchProfile(root=u, branch_ecc=ecc, factor=factor)


def balancing_factor(t: Graph, u: int) -> BranchProfile:
    """
    ξ_T(u) and the branch eccentricities at u.

    Raises:
        NotATree: t has a cycle or is disconnected.
    """
    require_tree(t)
    return _branch_profile(t, u)


def tree_adim1_check(t: Graph) -> TreeCheck:
    """
    Adim(T) = 1 iff ξ_T(v) = 1 for every vertex. Stops at the first
    violating vertex (ascending id) and reports it.

    Raises:
        NotATree: t has a cycle or is disconnected.
    """
    require_tree(t)
    for v in range(t.n):
        if _branch_profile(t, v).factor > 1:
            return TreeCheck(holds=False, violating=v)
    return TreeCheck(holds=True)
