"""
Enumeración sin isomorfos por aumento de vértices.

Cada grafo de orden k-1 se extiende con un vértice nuevo sobre todos los
subconjuntos de vecinos y se deduplica por forma canónica. Para grafos
conexos basta partir de los conexos de orden k-1 con subconjuntos no vacíos:
todo grafo conexo tiene un vértice que no es de corte.
"""
from typing import Dict, Iterator, Tuple

from graphcore import Graph, OrderTooLarge, ParameterError, build_graph

from enumeration.canonical import canonical_key, canonical_labeling


ENUMERATION_MAX_ORDER = 8
FREE_TREE_MAX_ORDER = 10

Masks = Tuple[int, ...]


def _graph(masks: Masks) -> Graph:
    n = len(masks)
    return build_graph(n, [(u, v) for u in range(n) for v in range(u + 1, n) if (masks[u] >> v) & 1])


def _relabel(masks: Masks, order) -> Masks:
    position = {v: i for i, v in enumerate(order)}
    relabeled = []
    for v in order:
        row = 0
        for u in range(len(masks)):
            if (masks[v] >> u) & 1:
                row |= 1 << position[u]
        relabeled.append(row)
    return tuple(relabeled)


def _augment(level: Dict[bytes, Masks], k: int, nonempty: bool) -> Iterator[Tuple[bytes, Masks]]:
    """Order-k graphs reachable from `level` (order k-1), each once, in canonical labeling."""
    seen = set()
    new = k - 1
    for parent_key in sorted(level):
        parent = level[parent_key]
        for subset in range(1 if nonempty else 0, 1 << new):
            child = tuple(
                row | (1 << new) if (subset >> v) & 1 else row
                for v, row in enumerate(parent)
            ) + (subset,)
            code, order = canonical_labeling(child, k)
            key = canonical_key(k, code)
            if key not in seen:
                seen.add(key)
                yield key, _relabel(child, order)


def _enumerate(n: int, connected: bool) -> Iterator[Graph]:
    level: Dict[bytes, Masks] = {canonical_key(1, 0): (0,)}
    for k in range(2, n):
        level = dict(_augment(level, k, nonempty=connected))
    if n == 1:
        yield _graph((0,))
        return
    for _, masks in _augment(level, n, nonempty=connected):
        yield _graph(masks)


def _check_order(n: int, low: int, high: int, what: str) -> None:
    if n > high:
        raise OrderTooLarge(
            f"built-in {what} stops at n={high}; stream larger orders as graph6 "
            f"(e.g. nauty geng) into 'classify'"
        )
    if n < low:
        raise ParameterError(f"{what} needs n >= {low}, got {n}")


def enumerate_connected(n: int) -> Iterator[Graph]:
    """
    One representative per isomorphism class of connected graphs on n vertices,
    in a deterministic order.

    Raises:
        OrderTooLarge: n > 8.
        ParameterError: n < 2.
    """
    _check_order(n, 2, ENUMERATION_MAX_ORDER, "connected enumeration")
    return _enumerate(n, connected=True)


def enumerate_all(n: int) -> Iterator[Graph]:
    """One representative per isomorphism class of graphs on n vertices, connected or not."""
    _check_order(n, 1, ENUMERATION_MAX_ORDER, "enumeration")
    return _enumerate(n, connected=False)


def enumerate_free_trees(n: int) -> Iterator[Graph]:
    """
    Non-isomorphic trees on n vertices (1 <= n <= 10), grown by attaching
    one leaf at a time.
    """
    _check_order(n, 1, FREE_TREE_MAX_ORDER, "free-tree enumeration")
    level: Dict[bytes, Masks] = {canonical_key(1, 0): (0,)}
    for k in range(2, n + 1):
        following: Dict[bytes, Masks] = {}
        for parent_key in sorted(level):
            parent = level[parent_key]
            for v in range(k - 1):
                child = tuple(row | (1 << (k - 1)) if u == v else row for u, row in enumerate(parent)) + (1 << v,)
                code, order = canonical_labeling(child, k)
                key = canonical_key(k, code)
                if key not in following:
                    following[key] = _relabel(child, order)
        level = following
    return iter([_graph(level[key]) for key in sorted(level)])
