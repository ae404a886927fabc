"""
Isomorph-free generation of connected graphs.

Every connected graph on n vertices has a non-cut vertex, so deleting it
leaves a connected graph on n - 1 vertices. Extending each class on n - 1
vertices by one new vertex with every nonempty neighbor set therefore reaches
every class on n vertices; canonical keys keep one representative per class.
"""
import sys
from typing import Dict, Iterator, Tuple

from tqdm import tqdm

from .canon import CanonicalLabel, canonize
from .console import debug
from .errors import EnumerationRangeError, InconsistencyError
from .graph import Graph, new_graph
from .graph6 import to_graph6

MAX_ENUMERATION_ORDER = 9

# Number of connected graphs on n unlabeled vertices.
KNOWN_COUNTS = {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112, 7: 853, 8: 11117, 9: 261080}


def _extend(g: Graph, mask: int) -> Graph:
    n = g.n
    adj = [a | ((mask >> u & 1) << n) for u, a in enumerate(g.adj)]
    adj.append(mask)
    return Graph(n + 1, tuple(adj))


_classes: Dict[int, Tuple[Graph, ...]] = {1: (new_graph(1, []),)}


def _connected_classes(n: int, progress: bool) -> Tuple[Graph, ...]:
    if n in _classes:
        return _classes[n]
    parents = _connected_classes(n - 1, progress)
    seen: Dict[CanonicalLabel, Graph] = {}
    for parent in tqdm(parents, desc=f"n={n}", unit="graph", file=sys.stderr,
                       disable=not progress, leave=False):
        for mask in range(1, 1 << (n - 1)):
            key, representative = canonize(_extend(parent, mask))
            if key not in seen:
                seen[key] = representative
    graphs = tuple(sorted(seen.values(), key=to_graph6))
    expected = KNOWN_COUNTS.get(n)
    if expected is not None and len(graphs) != expected:
        raise InconsistencyError(f"enumerated {len(graphs)} connected graphs on {n} vertices, expected {expected}")
    debug(f"enumerated {len(graphs)} connected graphs on {n} vertices")
    _classes[n] = graphs
    return graphs


def enumerate_connected(n: int, progress: bool = False) -> Iterator[Graph]:
    """One canonical representative per isomorphism class, sorted by graph6."""
    if not 1 <= n <= MAX_ENUMERATION_ORDER:
        raise EnumerationRangeError(
            f"built-in enumeration covers 1 <= n <= {MAX_ENUMERATION_ORDER}; "
            f"supply larger corpora as graph6 input"
        )
    show = progress and sys.stderr.isatty()
    return iter(_connected_classes(n, show))
