"""
Interaction network generators
"""

from .barabasi_albert import build_barabasi_albert
from .erdos_renyi import build_erdos_renyi
from .graph import Graph, Topology
from .lattice import build_lattice_x

__all__ = [
    "Graph",
    "Topology",
    "build_lattice_x",
    "build_erdos_renyi",
    "build_barabasi_albert",
]
