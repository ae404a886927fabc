"""
K_n - e: the complete graph with the edge {0, 1} removed.
Spectrum {0, 1, (n/(n-1))^(n-3), (n+1)/(n-1)}.
"""
from typing import Optional

from core.families import BaseFamily, clique_edges
from core.graph import Graph, complement, new_graph
from core.types import FamilyTag


class KnMinusEFamily(BaseFamily):
    name = "KnMinusE"
    aliases = ("Kn-e", "kn_minus_e")
    param_names = ("n",)
    min_values = (3,)
    recognition_order = 20

    def build(self, n: int) -> Graph:
        n, = self.check_params((n,))
        return new_graph(n, [e for e in clique_edges(range(n)) if e != (0, 1)])

    def lemma_partition(self, n: int):
        n, = self.check_params((n,))
        return [0b01, 0b10, ((1 << n) - 1) & ~0b11]

    def recognize(self, g: Graph) -> Optional[FamilyTag]:
        if g.n < 3 or complement(g).num_edges != 1:
            return None
        return self.tag(g.n)
