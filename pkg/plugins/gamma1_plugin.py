"""
Universal-vertex family: three disjoint cliques K_s, K_t, K_p and a vertex z
adjacent to everything (d_z = n - 1). G1(t) is the symmetric member.
"""
from typing import List, Tuple

from core.families import BaseFamily, clique_edges, consecutive_blocks, join_edges
from core.graph import Graph, mask_of, new_graph


def _gamma1(s: int, t: int, p: int) -> Graph:
    n = s + t + p + 1
    z = n - 1
    edges = []
    for block in consecutive_blocks((s, t, p)):
        edges += clique_edges(block)
    edges += join_edges(z, range(z))
    return new_graph(n, edges)


def _gamma1_partition(s: int, t: int, p: int):
    return [mask_of(b) for b in consecutive_blocks((s, t, p))] + [1 << (s + t + p)]


class Gamma1Family(BaseFamily):
    name = "Gamma1"
    param_names = ("s", "t", "p")
    min_values = (1, 1, 1)

    def build(self, s: int, t: int, p: int) -> Graph:
        return _gamma1(*self.check_params((s, t, p)))

    def lemma_partition(self, s: int, t: int, p: int):
        return _gamma1_partition(*self.check_params((s, t, p)))


class G1Family(BaseFamily):
    """G1(t) = Gamma1(t, t, t), n = 3t + 1."""

    name = "G1"
    param_names = ("t",)
    min_values = (2,)
    recognition_order = 30

    def build(self, t: int) -> Graph:
        t, = self.check_params((t,))
        return _gamma1(t, t, t)

    def lemma_partition(self, t: int):
        t, = self.check_params((t,))
        return _gamma1_partition(t, t, t)

    def params_for_order(self, n: int) -> List[Tuple[int, ...]]:
        if n % 3 == 1 and (n - 1) // 3 >= 2:
            return [((n - 1) // 3,)]
        return []
