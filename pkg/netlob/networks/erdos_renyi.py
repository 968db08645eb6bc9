"""
G(n, M) random graph: M distinct edges drawn uniformly from all pairs
"""

from __future__ import annotations

import networkx as nx
import numpy as np

from ..errors import NetworkParameterError
from .graph import Graph


def build_erdos_renyi(n: int, m: int, rng: np.random.Generator) -> Graph:
    if n < 1:
        raise NetworkParameterError(f"n must be >= 1, got {n}")
    max_edges = n * (n - 1) // 2
    if not 0 <= m <= max_edges:
        raise NetworkParameterError(f"m must be in [0, {max_edges}], got {m}")

    seed = int(rng.integers(2**32))
    return Graph.from_networkx(nx.gnm_random_graph(n, m, seed=seed))
