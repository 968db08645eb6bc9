"""
Square lattice with diagonals on a torus (every node has degree 8)
"""

from __future__ import annotations

import networkx as nx

from ..errors import NetworkParameterError
from .graph import Graph


def build_lattice_x(rows: int, cols: int) -> Graph:
    """
    rows x cols torus; node (r, c) has index r * cols + c.
    Each node links to its 4 axial and 4 diagonal neighbours, so M = 4 * rows * cols.
    """
    if rows < 3 or cols < 3:
        raise NetworkParameterError(
            f"lattice needs rows >= 3 and cols >= 3, got {rows}x{cols}"
        )

    g = nx.Graph()
    g.add_nodes_from(range(rows * cols))
    for r in range(rows):
        for c in range(cols):
            node = r * cols + c
            # half of the 8-neighbourhood; the other half comes from the neighbours
            for dr, dc in ((0, 1), (1, 0), (1, 1), (1, -1)):
                g.add_edge(node, ((r + dr) % rows) * cols + (c + dc) % cols)
    return Graph.from_networkx(g)
