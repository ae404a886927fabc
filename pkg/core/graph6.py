"""
graph6 codec on top of networkx, with the stricter checks the CLI relies on:
printable range, exact payload length, zero padding and the 64-vertex limit.
"""
from __future__ import annotations

from typing import IO, Iterable, Iterator, Tuple, Union

import networkx as nx

from .errors import Graph6Error, GraphError
from .graph import MAX_ORDER, Graph, new_graph

HEADER = b">>graph6<<"


def to_networkx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def from_networkx(h: nx.Graph) -> Graph:
    """Nodes are relabeled 0..n-1 in iteration order."""
    index = {v: i for i, v in enumerate(h.nodes)}
    return new_graph(len(index), [(index[u], index[v]) for u, v in h.edges])


def _order(data: bytes) -> Tuple[int, bytes]:
    if data[0] != 126:
        return data[0] - 63, data[1:]
    if len(data) < 4 or data[1] == 126:
        raise Graph6Error("malformed long-form graph6 header")
    n = (data[1] - 63) << 12 | (data[2] - 63) << 6 | (data[3] - 63)
    return n, data[4:]


def _validate(data: bytes) -> None:
    if not data:
        raise Graph6Error("empty graph6 string")
    if any(c < 63 or c > 126 for c in data):
        raise Graph6Error("graph6 bytes must lie in the printable range 63..126")
    n, payload = _order(data)
    if n < 1:
        raise Graph6Error("graph6 order must be at least 1")
    if n > MAX_ORDER:
        raise Graph6Error(f"order {n} exceeds the native limit of {MAX_ORDER}")
    total = n * (n - 1) // 2
    expected = (total + 5) // 6
    if len(payload) < expected:
        raise Graph6Error(f"truncated payload: {len(payload)} bytes, expected {expected}")
    if len(payload) > expected:
        raise Graph6Error(f"trailing data: {len(payload) - expected} extra bytes")
    pad = expected * 6 - total
    if pad and (payload[-1] - 63) & ((1 << pad) - 1):
        raise Graph6Error("nonzero padding bits")


def to_graph6(g: Graph) -> bytes:
    return nx.to_graph6_bytes(to_networkx(g), header=False).rstrip(b"\n")


def parse_graph6(text: Union[bytes, str]) -> Graph:
    try:
        data = text.encode("ascii") if isinstance(text, str) else bytes(text)
    except UnicodeEncodeError as e:
        raise Graph6Error(f"graph6 text must be ASCII: {e}") from e
    data = data.strip()
    if data.startswith(HEADER):
        data = data[len(HEADER):]
    _validate(data)
    try:
        h = nx.from_graph6_bytes(data)
    except (ValueError, nx.NetworkXError) as e:
        raise Graph6Error(str(e)) from e
    return from_networkx(h)


def iter_graph6(lines: Union[IO[bytes], IO[str], Iterable[Union[bytes, str]]]) -> Iterator[Tuple[int, bytes, Union[Graph, Exception]]]:
    """Yield (line number, raw line, graph or the parse error) for each non-blank line."""
    for lineno, raw in enumerate(lines, start=1):
        line = raw.encode("ascii", "replace") if isinstance(raw, str) else bytes(raw)
        line = line.strip()
        if not line:
            continue
        try:
            yield lineno, line, parse_graph6(line)
        except (Graph6Error, GraphError) as e:
            yield lineno, line, e
