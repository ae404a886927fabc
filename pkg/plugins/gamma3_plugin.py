"""
Triangle-hub family: cliques A = K_p, B = K_s, C = K_t and a triangle
x, y, z with x joined to A and B, y to B and C, z to A and C.
G3(t) = Gamma3(t, t, t), n = 3t + 3.
"""
from typing import List, Tuple

from core.families import BaseFamily, clique_edges, consecutive_blocks, join_edges
from core.graph import Graph, mask_of, new_graph


def _gamma3(p: int, s: int, t: int) -> Graph:
    a, b, c = consecutive_blocks((p, s, t))
    x, y, z = p + s + t, p + s + t + 1, p + s + t + 2
    edges = clique_edges(a) + clique_edges(b) + clique_edges(c)
    edges += join_edges(x, list(a) + list(b))
    edges += join_edges(y, list(b) + list(c))
    edges += join_edges(z, list(a) + list(c))
    edges += [(x, y), (y, z), (x, z)]
    return new_graph(p + s + t + 3, edges)


def _gamma3_partition(p: int, s: int, t: int):
    # hubs listed z, x, y: the hub on A and C comes first
    x = p + s + t
    return [mask_of(b) for b in consecutive_blocks((p, s, t))] + [1 << (x + 2), 1 << x, 1 << (x + 1)]


class Gamma3Family(BaseFamily):
    name = "Gamma3"
    param_names = ("p", "s", "t")
    min_values = (1, 1, 1)

    def build(self, p: int, s: int, t: int) -> Graph:
        return _gamma3(*self.check_params((p, s, t)))

    def lemma_partition(self, p: int, s: int, t: int):
        return _gamma3_partition(*self.check_params((p, s, t)))


class G3Family(BaseFamily):
    name = "G3"
    param_names = ("t",)
    min_values = (1,)
    recognition_order = 50

    def build(self, t: int) -> Graph:
        t, = self.check_params((t,))
        return _gamma3(t, t, t)

    def lemma_partition(self, t: int):
        t, = self.check_params((t,))
        return _gamma3_partition(t, t, t)

    def params_for_order(self, n: int) -> List[Tuple[int, ...]]:
        if n % 3 == 0 and n // 3 - 1 >= 1:
            return [(n // 3 - 1,)]
        return []
