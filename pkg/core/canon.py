"""
Canonical labeling by partition refinement and individualization.

Each search node refines an ordered partition to equitable form, then
individualizes the vertices of the first non-singleton cell. Vertices that
are twins of an already explored vertex are skipped: swapping two twins is an
automorphism that fixes the node, so their subtrees yield the same leaves.
The canonical key is the largest adjacency certificate over all leaves.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from .errors import CanonizerRangeError
from .graph import Graph, bits, mask_of

MAX_CANON_ORDER = 16

Cells = List[List[int]]


@dataclass(frozen=True, order=True)
class CanonicalLabel:
    key: bytes

    def __str__(self) -> str:
        return self.key.hex()


def _refine(adj: Sequence[int], cells: Cells) -> Cells:
    while True:
        masks = [mask_of(c) for c in cells]
        refined: Cells = []
        for cell in cells:
            if len(cell) == 1:
                refined.append(cell)
                continue
            groups = {}
            for v in cell:
                sig = tuple((adj[v] & m).bit_count() for m in masks)
                groups.setdefault(sig, []).append(v)
            for sig in sorted(groups):
                refined.append(groups[sig])
        if len(refined) == len(cells):
            return refined
        cells = refined


def _certificate(adj: Sequence[int], order: Sequence[int]) -> Tuple[int, ...]:
    pos = {v: i for i, v in enumerate(order)}
    return tuple(mask_of(pos[w] for w in bits(adj[v])) for v in order)


def _twins(adj: Sequence[int], u: int, v: int) -> bool:
    return adj[u] & ~(1 << v) == adj[v] & ~(1 << u)


def _canonical_order(g: Graph) -> Tuple[Tuple[int, ...], List[int]]:
    if g.n > MAX_CANON_ORDER:
        raise CanonizerRangeError(f"canonizer supports n <= {MAX_CANON_ORDER}, got {g.n}")
    adj = g.adj
    best_cert: Optional[Tuple[int, ...]] = None
    best_order: List[int] = []

    def visit(cells: Cells) -> None:
        nonlocal best_cert, best_order
        cells = _refine(adj, cells)
        target = next((i for i, c in enumerate(cells) if len(c) > 1), None)
        if target is None:
            order = [c[0] for c in cells]
            cert = _certificate(adj, order)
            if best_cert is None or cert > best_cert:
                best_cert, best_order = cert, order
            return
        cell = cells[target]
        explored: List[int] = []
        for v in cell:
            if any(_twins(adj, v, r) for r in explored):
                continue
            explored.append(v)
            rest = [w for w in cell if w != v]
            visit(cells[:target] + [[v], rest] + cells[target + 1:])

    visit([list(range(g.n))])
    return best_cert, best_order


def canonical_form(g: Graph) -> CanonicalLabel:
    return canonize(g)[0]


def canonical_graph(g: Graph) -> Graph:
    """The representative of g's isomorphism class that canonical_form describes."""
    return canonize(g)[1]


def are_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.num_edges != h.num_edges or sorted(g.degrees) != sorted(h.degrees):
        return False
    return canonical_form(g) == canonical_form(h)


def canonize(g: Graph) -> Tuple[CanonicalLabel, Graph]:
    """canonical_form and canonical_graph from a single search."""
    cert, order = _canonical_order(g)
    width = (g.n + 7) // 8
    label = CanonicalLabel(bytes([g.n]) + b"".join(row.to_bytes(width, "big") for row in cert))
    perm = [0] * g.n
    for i, v in enumerate(order):
        perm[v] = i
    return label, g.relabel(perm)
