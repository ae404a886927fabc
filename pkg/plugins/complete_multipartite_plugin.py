"""
Complete multipartite graphs K_{a,b,...}.

Recognition tags only the tripartite case, as CompleteTripartite(a, b, c).
"""
from typing import Optional

from core.families import BaseFamily, consecutive_blocks
from core.errors import FamilyError
from core.graph import Graph, complement_clique_sizes, new_graph
from core.types import FamilyTag


class CompleteMultipartiteFamily(BaseFamily):
    name = "CompleteMultipartite"
    aliases = ("multipartite", "Kparts")
    param_names = ("parts",)
    variadic = True
    recognition_order = 10

    def check_params(self, params):
        params = tuple(int(p) for p in params)
        if len(params) < 2:
            raise FamilyError("a complete multipartite graph needs at least 2 parts")
        if min(params) < 1:
            raise FamilyError(f"every part needs at least one vertex, got {list(params)}")
        return params

    def build(self, *parts: int) -> Graph:
        parts = self.check_params(parts)
        blocks = consecutive_blocks(parts)
        edges = [
            (u, v)
            for i, a in enumerate(blocks)
            for b in blocks[i + 1:]
            for u in a
            for v in b
        ]
        return new_graph(sum(parts), edges)

    def lemma_partition(self, *parts: int):
        parts = self.check_params(parts)
        return [sum(1 << v for v in block) for block in consecutive_blocks(parts)]

    def recognize(self, g: Graph) -> Optional[FamilyTag]:
        parts = complement_clique_sizes(g)
        if parts is None or len(parts) != 3:
            return None
        return FamilyTag(family="CompleteTripartite", params=tuple(parts))
