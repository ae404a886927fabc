import os
import tempfile

# Settings and debug logs go to a throwaway directory, set before core.paths is imported
os.environ["SPECMULT_HOME"] = tempfile.mkdtemp(prefix="specmult-tests-")
os.environ.pop("SPECMULT_WORKERS", None)

import networkx as nx  # noqa: E402
from hypothesis import strategies as st  # noqa: E402

from core.graph import Graph, new_graph  # noqa: E402


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def from_nx(h: nx.Graph) -> Graph:
    index = {v: i for i, v in enumerate(sorted(h.nodes))}
    return new_graph(len(index), [(index[u], index[v]) for u, v in h.edges])


@st.composite
def graphs(draw, min_n: int = 1, max_n: int = 9, connected: bool = False):
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    edges = [e for e, keep in zip(pairs, chosen) if keep]
    if connected:
        # a random spanning path keeps the draw connected
        order = draw(st.permutations(list(range(n))))
        edges += list(zip(order, order[1:]))
    return new_graph(n, edges)


def connected_graphs(min_n: int = 2, max_n: int = 8):
    return graphs(min_n, max_n, connected=True)
