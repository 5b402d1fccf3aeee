"""
Forma canónica de grafos pequeños (n <= 10).

Refinamiento equitativo de la partición ordenada de vértices más
individualización; en cada celda sólo se individualiza un vértice por clase
de gemelos. La clave es el código de adyacencia mínimo entre las hojas del
árbol de búsqueda.
"""
from typing import List, Sequence, Tuple

from graphcore import Graph, OrderTooLarge


CANONICAL_MAX_ORDER = 10


def _popcount(x: int) -> int:
    return bin(x).count("1")


def _refine(masks: Sequence[int], cells: List[List[int]]) -> List[List[int]]:
    """Equitable refinement: split cells by neighbor counts into each splitter cell until stable."""
    cells = [list(cell) for cell in cells]
    changed = True
    while changed:
        changed = False
        for w in range(len(cells)):
            splitter = 0
            for v in cells[w]:
                splitter |= 1 << v
            refined: List[List[int]] = []
            for cell in cells:
                if len(cell) == 1:
                    refined.append(cell)
                    continue
                groups = {}
                for v in cell:
                    groups.setdefault(_popcount(masks[v] & splitter), []).append(v)
                if len(groups) == 1:
                    refined.append(cell)
                else:
                    changed = True
                    refined.extend(groups[count] for count in sorted(groups))
            cells = refined
            if changed:
                break
    return cells


def _twin_representatives(masks: Sequence[int], cell: List[int]) -> List[int]:
    reps: List[int] = []
    for v in cell:
        if not any((masks[v] & ~(1 << u)) == (masks[u] & ~(1 << v)) for u in reps):
            reps.append(v)
    return reps


def _code(masks: Sequence[int], order: Sequence[int]) -> int:
    # Triángulo superior por columnas, como en graph6
    code = 0
    for j in range(1, len(order)):
        row = masks[order[j]]
        for i in range(j):
            code = (code << 1) | ((row >> order[i]) & 1)
    return code


def _search(masks: Sequence[int], cells: List[List[int]], best: List) -> None:
    cells = _refine(masks, cells)
    target = next((i for i, cell in enumerate(cells) if len(cell) > 1), None)
    if target is None:
        order = [cell[0] for cell in cells]
        code = _code(masks, order)
        if best[0] is None or code < best[0]:
            best[0], best[1] = code, order
        return
    cell = cells[target]
    for v in _twin_representatives(masks, cell):
        rest = [u for u in cell if u != v]
        _search(masks, cells[:target] + [[v], rest] + cells[target + 1:], best)


def canonical_labeling(masks: Sequence[int], n: int) -> Tuple[int, List[int]]:
    """
    Minimum adjacency code over the search leaves and the order attaining it.

    Args:
        masks: Adjacency bitmask of every vertex.
        n: Vertex count.
    """
    if n <= 1:
        return 0, list(range(n))
    best = [None, None]
    _search(masks, [list(range(n))], best)
    return best[0], best[1]


def canonical_key(n: int, code: int) -> bytes:
    width = (n * (n - 1) // 2 + 7) // 8
    return bytes([n]) + code.to_bytes(width, "big")


def canonical_form(g: Graph) -> bytes:
    """
    Byte key equal for two graphs iff they are isomorphic.

    Raises:
        OrderTooLarge: n > 10.
    """
    if g.n > CANONICAL_MAX_ORDER:
        raise OrderTooLarge(f"canonical form supports n <= {CANONICAL_MAX_ORDER}, got {g.n}")
    code, _ = canonical_labeling(g.masks, g.n)
    return canonical_key(g.n, code)


def canonical_graph(g: Graph) -> Graph:
    """Isomorphic copy of g in canonical vertex order."""
    if g.n > CANONICAL_MAX_ORDER:
        raise OrderTooLarge(f"canonical form supports n <= {CANONICAL_MAX_ORDER}, got {g.n}")
    _, order = canonical_labeling(g.masks, g.n)
    return g.relabel(order)
