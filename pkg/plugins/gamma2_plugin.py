"""
Two-hub family: cliques A = K_p, B = K_s, C = K_t and adjacent hubs x, y
with x joined to A and B, y joined to B and C.

Degrees: A-members p, B-members s + 1, C-members t, d_x = p + s + 1,
d_y = s + t + 1. G2(t) = Gamma2(t, t - 1, t).
"""
from typing import List, Tuple

from core.families import BaseFamily, clique_edges, consecutive_blocks, join_edges
from core.graph import Graph, mask_of, new_graph


def _gamma2(p: int, s: int, t: int) -> Graph:
    a, b, c = consecutive_blocks((p, s, t))
    x, y = p + s + t, p + s + t + 1
    edges = clique_edges(a) + clique_edges(b) + clique_edges(c)
    edges += join_edges(x, list(a) + list(b))
    edges += join_edges(y, list(b) + list(c))
    edges.append((x, y))
    return new_graph(p + s + t + 2, edges)


def _gamma2_partition(p: int, s: int, t: int):
    x = p + s + t
    return [mask_of(b) for b in consecutive_blocks((p, s, t))] + [1 << x, 1 << (x + 1)]


class Gamma2Family(BaseFamily):
    name = "Gamma2"
    param_names = ("p", "s", "t")
    min_values = (1, 1, 1)

    def build(self, p: int, s: int, t: int) -> Graph:
        return _gamma2(*self.check_params((p, s, t)))

    def lemma_partition(self, p: int, s: int, t: int):
        return _gamma2_partition(*self.check_params((p, s, t)))


class G2Family(BaseFamily):
    """G2(t) = Gamma2(t, t-1, t), n = 3t + 1; the middle clique needs t >= 2."""

    name = "G2"
    param_names = ("t",)
    min_values = (2,)
    recognition_order = 40

    def build(self, t: int) -> Graph:
        t, = self.check_params((t,))
        return _gamma2(t, t - 1, t)

    def lemma_partition(self, t: int):
        t, = self.check_params((t,))
        return _gamma2_partition(t, t - 1, t)

    def params_for_order(self, n: int) -> List[Tuple[int, ...]]:
        if n % 3 == 1 and (n - 1) // 3 >= 2:
            return [((n - 1) // 3,)]
        return []
