"""
doublegraph - double graphs D_n[G] = G x T_n.

Exact vertex and edge connectivity, max-connectivity classification,
Hamiltonian lifting, and a harness that machine-checks the known laws
for D_n[G] on exhaustive small-graph corpora.
"""

__version__ = "0.1.0"
__author__ = "doublegraph contributors"

from .core.config import Config, load_config
from .core.graph import Graph, GraphError, graph_from_edge_list
from .core.product import double_n

__all__ = ["Config", "Graph", "GraphError", "double_n", "graph_from_edge_list", "load_config",
           "__version__"]
