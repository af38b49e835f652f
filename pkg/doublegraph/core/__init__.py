"""Core components: graphs, products, flow, connectivity, classification, lifts."""

from .config import Config, load_config
from .connectivity import edge_connectivity, vertex_connectivity
from .graph import Graph, GraphError
from .product import double_n

__all__ = ["Config", "Graph", "GraphError", "double_n", "edge_connectivity", "load_config",
           "vertex_connectivity"]
