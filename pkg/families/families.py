"""
Familias de grafos con nombre usadas como fixtures y en los experimentos.

Todos los constructores devuelven vértices 0..n-1 consecutivos.
"""
from typing import Callable, Dict, Tuple

import networkx as nx

from graphcore import Graph, ParameterError, build_graph
from products import ProductKind, ProductSpec, product


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise ParameterError(message)


def path(n: int) -> Graph:
    _require(n >= 1, f"path needs n >= 1, got {n}")
    return Graph.from_networkx(nx.path_graph(n))


def cycle(n: int) -> Graph:
    _require(n >= 3, f"cycle needs n >= 3, got {n}")
    return Graph.from_networkx(nx.cycle_graph(n))


def complete(n: int) -> Graph:
    _require(n >= 1, f"complete graph needs n >= 1, got {n}")
    return Graph.from_networkx(nx.complete_graph(n))


def star(n: int) -> Graph:
    """K_{1,n-1}: center 0, leaves 1..n-1."""
    _require(n >= 2, f"star needs n >= 2, got {n}")
    return Graph.from_networkx(nx.star_graph(n - 1))


def petersen() -> Graph:
    return Graph.from_networkx(nx.petersen_graph())


def grid(rows: int, cols: int) -> Graph:
    """P_rows □ P_cols with flat id (i-1)*cols + (j-1) for grid position (i, j)."""
    _require(rows >= 1 and cols >= 1, "grid sides must be >= 1")
    edges = []
    for i in range(rows):
        for j in range(cols):
            v = i * cols + j
            if j + 1 < cols:
                edges.append((v, v + 1))
            if i + 1 < rows:
                edges.append((v, v + cols))
    return build_graph(rows * cols, edges)


def b_t(t: int) -> Graph:
    """
    Block graph B_t: path v_1..v_2t (ids 0..2t-1) plus u_i (id 2t-1+i)
    adjacent to v_2i and v_2i+1 (ids 2i-1 and 2i) for i = 1..t-1.
    """
    _require(t >= 2, f"B_t needs t >= 2, got {t}")
    edges = [(i, i + 1) for i in range(2 * t - 1)]
    for i in range(1, t):
        u = 2 * t - 1 + i
        edges.append((u, 2 * i - 1))
        edges.append((u, 2 * i))
    return build_graph(3 * t - 1, edges)


def b_t_center(t: int) -> int:
    """Id of u_{t/2}, the central vertex of B_t for even t."""
    _require(t >= 2 and t % 2 == 0, "center vertex u_{t/2} exists for even t")
    return 2 * t - 1 + t // 2


def t_star() -> Graph:
    """P_6 = v1..v6 (ids 0..5) plus w (id 6) adjacent to v3 (id 2)."""
    return build_graph(7, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (2, 6)])


def t_star_times_even_path(n: int) -> Graph:
    """T* □ P_2n (14n vertices, flat id g*2n + h)."""
    _require(n >= 1, f"T* x P_2n needs n >= 1, got {n}")
    return product(ProductSpec(kind=ProductKind.CARTESIAN, first=t_star(), second=path(2 * n)))


def grid_edge_predicate(n: int, edge: Tuple[int, int]) -> bool:
    """True iff both endpoints of `edge` have degree <= 3 in P_2n □ P_2n."""
    g = grid(2 * n, 2 * n)
    return all(g.degree(v) <= 3 for v in edge)


def grid_minus_edge(n: int, edge: Tuple[int, int]) -> Graph:
    """
    P_2n □ P_2n with exactly `edge` removed.

    Raises:
        ParameterError: n < 1 or `edge` is not an edge of the grid.
    """
    _require(n >= 1, f"grid needs n >= 1, got {n}")
    g = grid(2 * n, 2 * n)
    u, v = edge
    _require(0 <= u < g.n and 0 <= v < g.n and g.has_edge(u, v), f"({u}, {v}) is not a grid edge")
    return build_graph(g.n, [e for e in g.edges() if set(e) != {u, v}])


def hamming(n: int) -> Graph:
    """K_n □ K_n."""
    _require(n >= 2, f"Hamming graph needs n >= 2, got {n}")
    return product(ProductSpec(kind=ProductKind.CARTESIAN, first=complete(n), second=complete(n)))


# Registro para el CLI: nombre -> (constructor, número de parámetros enteros)
FAMILIES: Dict[str, Tuple[Callable[..., Graph], int]] = {
    'path': (path, 1),
    'cycle': (cycle, 1),
    'complete': (complete, 1),
    'star': (star, 1),
    'petersen': (petersen, 0),
    'grid': (grid, 2),
    'b_t': (b_t, 1),
    't_star': (t_star, 0),
    't_star_times_even_path': (t_star_times_even_path, 1),
    'grid_minus_edge': (grid_minus_edge, 3),
    'hamming': (hamming, 1),
}


def build_family(name: str, *params: int) -> Graph:
    """
    Builds a named family member.

    grid_minus_edge takes (n, u, v).

    Raises:
        ParameterError: Unknown name or wrong parameter count.
    """
    if name not in FAMILIES:
        raise ParameterError(f"unknown family '{name}' (known: {', '.join(sorted(FAMILIES))})")
    builder, arity = FAMILIES[name]
    if len(params) != arity:
        raise ParameterError(f"family '{name}' takes {arity} integer parameter(s), got {len(params)}")
    if name == 'grid_minus_edge':
        n, u, v = params
        return builder(n, (u, v))
    return builder(*params)
