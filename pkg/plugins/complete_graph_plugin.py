"""
Complete graph K_n.
Spectrum {0, (n/(n-1))^(n-1)}; the nu = 1 case of the characterization.
"""
from core.families import BaseFamily, clique_edges
from core.graph import Graph, new_graph


class CompleteGraphFamily(BaseFamily):
    """K_n on vertices 0..n-1."""

    name = "CompleteGraph"
    aliases = ("K", "Kn", "complete")
    param_names = ("n",)
    min_values = (1,)

    def build(self, n: int) -> Graph:
        n, = self.check_params((n,))
        return new_graph(n, clique_edges(range(n)))

    def lemma_partition(self, n: int):
        return [(1 << n) - 1]
