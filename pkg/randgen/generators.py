"""
Generadores aleatorios sembrados: Barabási-Albert, G(n,m) y G(n,p).

Cada muestra usa una semilla derivada de (seed, índice) con numpy
SeedSequence, así que un barrido da el mismo resultado sea cual sea el
número de workers o el orden de ejecución.
"""
import math

import networkx as nx
import numpy as np

from graphcore import Graph

from randgen.config import RandomModel, RandomModelConfig


def derive_seed(seed: int, index: int) -> int:
    """Deterministic 64-bit seed for sample `index` of a stream seeded with `seed`."""
    state = np.random.SeedSequence(entropy=seed, spawn_key=(index,)).generate_state(1, dtype=np.uint64)
    return int(state[0])


def barabasi_albert(cfg: RandomModelConfig, index: int = 0) -> Graph:
    """
    Preferential attachment from K_{m+1} (or K_{1,m}): each new vertex takes
    m distinct neighbors sampled proportionally to degree.
    """
    seed_graph = nx.complete_graph(cfg.m + 1) if cfg.ba_initial == "complete" else nx.star_graph(cfg.m)
    nxg = nx.barabasi_albert_graph(cfg.n, cfg.m, seed=derive_seed(cfg.seed, index), initial_graph=seed_graph)
    return Graph.from_networkx(nxg)


def gnm(cfg: RandomModelConfig, index: int = 0) -> Graph:
    """m distinct edges drawn uniformly without replacement."""
    return Graph.from_networkx(nx.gnm_random_graph(cfg.n, cfg.m, seed=derive_seed(cfg.seed, index)))


def gnp(cfg: RandomModelConfig, index: int = 0) -> Graph:
    """Each of the n(n-1)/2 pairs kept independently with probability p."""
    return Graph.from_networkx(nx.gnp_random_graph(cfg.n, cfg.p, seed=derive_seed(cfg.seed, index)))


_GENERATORS = {
    RandomModel.BARABASI_ALBERT: barabasi_albert,
    RandomModel.GNM: gnm,
    RandomModel.GNP: gnp,
}


def generate(cfg: RandomModelConfig, index: int = 0) -> Graph:
    """Sample `index` of the stream described by cfg."""
    return _GENERATORS[cfg.model](cfg, index)


def connectivity_threshold_p(n: int, epsilon: float = 0.001) -> float:
    """(1 + epsilon) ln(n) / n, above which G(n,p) is almost surely connected."""
    return (1.0 + epsilon) * math.log(n) / n
