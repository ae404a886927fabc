# Family plugin base class and construction helpers
from .base_family import BaseFamily, clique_edges, consecutive_blocks, join_edges

__all__ = ["BaseFamily", "clique_edges", "consecutive_blocks", "join_edges"]
