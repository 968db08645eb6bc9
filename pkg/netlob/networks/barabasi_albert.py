"""
Barabási–Albert preferential attachment grown from a complete seed graph
"""

from __future__ import annotations

import networkx as nx
import numpy as np

from ..errors import NetworkParameterError
from .graph import Graph


def build_barabasi_albert(n: int, m_attach: int, rng: np.random.Generator) -> Graph:
    """
    Seed is K_{m_attach+1}; each arriving node links to m_attach distinct
    existing nodes drawn with probability proportional to degree.
    n=1000, m_attach=4 gives M = 10 + 4 * 995 = 3990.
    """
    if m_attach < 1:
        raise NetworkParameterError(f"m_attach must be >= 1, got {m_attach}")
    if n <= m_attach:
        raise NetworkParameterError(f"need n > m_attach, got n={n}, m_attach={m_attach}")

    seed = int(rng.integers(2**32))
    g = nx.barabasi_albert_graph(
        n, m_attach, seed=seed, initial_graph=nx.complete_graph(m_attach + 1)
    )
    return Graph.from_networkx(g)
