"""
Simple undirected graphs on at most 64 vertices.

Adjacency is stored as one integer bitset per vertex; a VertexSet is a plain
int whose bit i marks vertex i. Graph values are immutable and hashable.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, List, Optional, Sequence, Tuple

from .errors import GraphError

MAX_ORDER = 64

VertexSet = int


def bits(mask: VertexSet) -> Iterator[int]:
    """Yield the vertex ids in a bitset, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> VertexSet:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


@dataclass(frozen=True)
class Graph:
    n: int
    adj: Tuple[int, ...]

    def degree(self, u: int) -> int:
        return self.adj[u].bit_count()

    @property
    def degrees(self) -> Tuple[int, ...]:
        return tuple(a.bit_count() for a in self.adj)

    @property
    def full_mask(self) -> VertexSet:
        return (1 << self.n) - 1

    def neighbors(self, u: int) -> List[int]:
        return list(bits(self.adj[u]))

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> List[Tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in bits(self.adj[u] >> (u + 1) << (u + 1))]

    @property
    def num_edges(self) -> int:
        return sum(self.degrees) // 2

    def has_isolated_vertex(self) -> bool:
        return any(a == 0 for a in self.adj)

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Return the graph with vertex u renamed to perm[u]."""
        if sorted(perm) != list(range(self.n)):
            raise GraphError(f"not a permutation of 0..{self.n - 1}: {list(perm)}")
        adj = [0] * self.n
        for u in range(self.n):
            adj[perm[u]] = mask_of(perm[v] for v in bits(self.adj[u]))
        return Graph(self.n, tuple(adj))

    def induced(self, vertices: Sequence[int]) -> "Graph":
        """Induced subgraph; vertices[i] becomes vertex i."""
        index = {v: i for i, v in enumerate(vertices)}
        adj = []
        for v in vertices:
            adj.append(mask_of(index[w] for w in bits(self.adj[v]) if w in index))
        return Graph(len(vertices), tuple(adj))


def new_graph(n: int, edges: Iterable[Tuple[int, int]]) -> Graph:
    """Build a graph from an edge list; duplicate pairs are merged."""
    if n < 1:
        raise GraphError("a graph needs at least one vertex")
    if n > MAX_ORDER:
        raise GraphError(f"n = {n} exceeds the native limit of {MAX_ORDER} vertices")
    adj = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise GraphError(f"self-loop at vertex {u}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj))


def complement(g: Graph) -> Graph:
    full = g.full_mask
    return Graph(g.n, tuple(full & ~a & ~(1 << u) for u, a in enumerate(g.adj)))


def is_connected(g: Graph) -> bool:
    seen = 1
    frontier = 1
    while frontier:
        reach = 0
        for u in bits(frontier):
            reach |= g.adj[u]
        frontier = reach & ~seen
        seen |= frontier
    return seen == g.full_mask


def components(g: Graph) -> List[VertexSet]:
    """Connected components as bitsets, ordered by smallest vertex."""
    remaining = g.full_mask
    result = []
    while remaining:
        start = remaining & -remaining
        seen = frontier = start
        while frontier:
            reach = 0
            for u in bits(frontier):
                reach |= g.adj[u]
            frontier = reach & ~seen
            seen |= frontier
        result.append(seen)
        remaining &= ~seen
    return result


def is_clique(g: Graph, vertices: VertexSet) -> bool:
    return all((g.adj[u] | 1 << u) & vertices == vertices for u in bits(vertices))


def is_independent(g: Graph, vertices: VertexSet) -> bool:
    return all(g.adj[u] & vertices == 0 for u in bits(vertices))


def common_neighbors(g: Graph, *vertices: int) -> VertexSet:
    mask = g.full_mask
    for v in vertices:
        mask &= g.adj[v]
    return mask


def _color_sort(adj: Sequence[int], cand: VertexSet) -> Tuple[List[int], List[int]]:
    """Greedy sequential coloring of cand; colors are an upper bound on clique size."""
    order: List[int] = []
    colors: List[int] = []
    color = 0
    uncolored = cand
    while uncolored:
        color += 1
        q = uncolored
        while q:
            v = (q & -q).bit_length() - 1
            q &= ~adj[v] & ~(1 << v)
            uncolored &= ~(1 << v)
            order.append(v)
            colors.append(color)
    return order, colors


def clique_number(g: Graph) -> int:
    """Exact maximum clique size by branch and bound with a coloring bound."""
    adj = g.adj
    best = 0

    def expand(cand: VertexSet, size: int) -> None:
        nonlocal best
        order, colors = _color_sort(adj, cand)
        for v, color in zip(reversed(order), reversed(colors)):
            if size + color <= best:
                return
            sub = cand & adj[v]
            if sub:
                expand(sub, size + 1)
            elif size + 1 > best:
                best = size + 1
            cand &= ~(1 << v)

    expand(g.full_mask, 0)
    return best


def independence_number(g: Graph) -> int:
    return clique_number(complement(g))


def has_independent_set_of_size(g: Graph, k: int) -> bool:
    """Direct search for k pairwise nonadjacent vertices, no bound computation."""
    if k < 1:
        raise GraphError("k must be at least 1")
    adj = g.adj

    def extend(cand: VertexSet, need: int) -> bool:
        if need == 0:
            return True
        while cand:
            if cand.bit_count() < need:
                return False
            v = (cand & -cand).bit_length() - 1
            cand &= ~(1 << v)
            if extend(cand & ~adj[v], need - 1):
                return True
        return False

    return extend(g.full_mask, k)


def independent_sets_of_size(g: Graph, k: int) -> Iterator[Tuple[int, ...]]:
    """All k-subsets that are independent, in lexicographic order."""
    adj = g.adj

    def extend(chosen: Tuple[int, ...], cand: VertexSet) -> Iterator[Tuple[int, ...]]:
        if len(chosen) == k:
            yield chosen
            return
        while cand:
            v = (cand & -cand).bit_length() - 1
            cand &= ~(1 << v)
            yield from extend(chosen + (v,), cand & ~adj[v])

    yield from extend((), g.full_mask)


def complement_clique_sizes(g: Graph) -> Optional[List[int]]:
    """Sorted component sizes of complement(g) when each component is a clique, else None."""
    co = complement(g)
    sizes = []
    for comp in components(co):
        if not is_clique(co, comp):
            return None
        sizes.append(comp.bit_count())
    return sorted(sizes)
