"""
Immutable undirected interaction graph
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from pathlib import Path
from typing import Protocol

import networkx as nx
import numpy as np
import pandas as pd

from ..errors import NetworkParameterError, NodeOutOfRangeError


class Topology(Protocol):
    """Anything the spreading protocol can walk."""

    def neighbors(self, node: int) -> Sequence[int]:
        ...


@dataclass(frozen=True)
class Graph:
    n: int
    edges: tuple[tuple[int, int], ...]
    adjacency: tuple[tuple[int, ...], ...]

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        g = nx.Graph()
        g.add_nodes_from(range(n))
        g.add_edges_from(edges)
        return cls.from_networkx(g)

    @classmethod
    def from_networkx(cls, g: nx.Graph) -> Graph:
        n = g.number_of_nodes()
        if sorted(g.nodes) != list(range(n)):
            raise NetworkParameterError("graph nodes must be labelled 0..n-1")
        if nx.number_of_selfloops(g):
            raise NetworkParameterError("self-loops are not allowed")
        edges = tuple(sorted((min(u, v), max(u, v)) for u, v in g.edges))
        adjacency = tuple(tuple(sorted(g.adj[node])) for node in range(n))
        return cls(n=n, edges=edges, adjacency=adjacency)

    @property
    def m(self) -> int:
        return len(self.edges)

    def neighbors(self, node: int) -> tuple[int, ...]:
        if not 0 <= node < self.n:
            raise NodeOutOfRangeError(f"node {node} not in 0..{self.n - 1}")
        return self.adjacency[node]

    def degrees(self) -> np.ndarray:
        return np.fromiter((len(a) for a in self.adjacency), dtype=np.int64, count=self.n)

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(range(self.n))
        g.add_edges_from(self.edges)
        return g

    def summary(self) -> dict[str, float]:
        degrees = self.degrees()
        return {
            "nodes": self.n,
            "edges": self.m,
            "min_degree": int(degrees.min()) if self.n else 0,
            "mean_degree": float(degrees.mean()) if self.n else 0.0,
            "max_degree": int(degrees.max()) if self.n else 0,
        }

    def export_edge_list(self, path: str | Path) -> Path:
        """One 'u,v' pair per line, 0-indexed, u < v, no header."""
        path = Path(path)
        path.parent.mkdir(parents=True, exist_ok=True)
        frame = pd.DataFrame(list(self.edges), columns=["u", "v"])
        frame.to_csv(path, header=False, index=False, lineterminator="\n")
        return path
