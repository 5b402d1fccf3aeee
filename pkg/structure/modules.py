"""
Módulos, primalidad y gemelos.

No se implementa la descomposición modular completa: basta con el tipo de
la raíz (componentes o co-componentes) y, para raíces primas, el cierre
modular de cada par de vértices.
"""
from dataclasses import dataclass
from enum import Enum
from itertools import combinations
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple

from graphcore import Graph


class ModuleKind(str, Enum):
    PAIR_CLOSURE = "PAIR_CLOSURE"
    DEGENERATE_ROOT = "DEGENERATE_ROOT"


@dataclass(frozen=True)
class ModuleWitness:
    """
    Result of the module search.

    Attributes:
        module: A nontrivial module (1 < |M| < n), or None when g is prime.
        kind: How the module was obtained.
        is_prime: True iff g has no nontrivial module.
    """
    module: Optional[FrozenSet[int]]
    kind: Optional[ModuleKind]
    is_prime: bool

    @property
    def size(self) -> int:
        return len(self.module) if self.module else 1

    def to_dict(self) -> dict:
        return {
            'module': sorted(self.module) if self.module else None,
            'kind': self.kind.value if self.kind else None,
            'is_prime': self.is_prime,
        }


def is_module(g: Graph, members: Sequence[int]) -> bool:
    """N(u)∖M = N(v)∖M for all u, v in M."""
    block = frozenset(members)
    outside = [g.adjacency[v] - block for v in block]
    return all(o == outside[0] for o in outside)


def pair_closure(masks: Sequence[int], n: int, u: int, v: int) -> int:
    """Bitmask of the smallest module containing u and v."""
    module = (1 << u) | (1 << v)
    changed = True
    while changed:
        changed = False
        for w in range(n):
            if module >> w & 1:
                continue
            seen = masks[w] & module
            if seen and seen != module:
                module |= 1 << w
                changed = True
    return module


def _all_but_smallest(parts: List[List[int]], n: int) -> FrozenSet[int]:
    # Empate: se excluye la parte con el mayor vértice mínimo
    smallest = min(parts, key=lambda p: (len(p), -p[0]))
    return frozenset(range(n)) - frozenset(smallest)


def _members(mask: int) -> FrozenSet[int]:
    return frozenset(i for i in range(mask.bit_length()) if mask >> i & 1)


def find_nontrivial_module(g: Graph) -> ModuleWitness:
    """
    Finds a nontrivial module or proves g prime.

    Disconnected g: union of all components but the smallest. Disconnected
    complement: union of all co-components but the smallest. Otherwise the
    largest pair closure different from V; g is prime when every pair
    closure is V.
    """
    n = g.n
    if n < 3:
        return ModuleWitness(module=None, kind=None, is_prime=True)

    components = g.components()
    if len(components) > 1:
        return ModuleWitness(_all_but_smallest(components, n), ModuleKind.DEGENERATE_ROOT, False)

    co_components = g.complement().components()
    if len(co_components) > 1:
        return ModuleWitness(_all_but_smallest(co_components, n), ModuleKind.DEGENERATE_ROOT, False)

    masks = g.masks
    full = (1 << n) - 1
    best = 0
    for u, v in combinations(range(n), 2):
        if best >> u & 1 and best >> v & 1:
            continue
        closure = pair_closure(masks, n, u, v)
        if closure != full and bin(closure).count("1") > bin(best).count("1"):
            best = closure
    if not best:
        return ModuleWitness(module=None, kind=None, is_prime=True)
    return ModuleWitness(_members(best), ModuleKind.PAIR_CLOSURE, False)


def largest_proper_module_size(g: Graph) -> int:
    """|M| of the largest module different from V(G); 1 when g is prime."""
    return find_nontrivial_module(g).size


# ==================== GEMELOS ====================

def twin_classes(g: Graph) -> List[Tuple[int, ...]]:
    """
    Classes of pairwise twins with at least two members, by neighborhood hashing.

    False twins share N(v); true twins share N[v]. Each class is a module.
    """
    groups: Dict[Tuple[bool, FrozenSet[int]], List[int]] = {}
    for v in range(g.n):
        groups.setdefault((False, g.adjacency[v]), []).append(v)
        groups.setdefault((True, g.adjacency[v] | {v}), []).append(v)
    classes = [tuple(members) for members in groups.values() if len(members) > 1]
    return sorted(classes, key=lambda c: c[0])


def find_twins(g: Graph) -> List[Tuple[int, int]]:
    """All pairs u < v with N(u)∖{v} = N(v)∖{u}."""
    pairs = set()
    for members in twin_classes(g):
        pairs.update(combinations(members, 2))
    return sorted(pairs)


def largest_twin_class(g: Graph) -> Optional[Tuple[int, ...]]:
    classes = twin_classes(g)
    if not classes:
        return None
    return max(classes, key=lambda c: (len(c), -c[0]))
