import io

import networkx as nx
import pytest
from hypothesis import given, settings

from conftest import graphs, to_nx
from core.errors import Graph6Error
from core.graph import new_graph
from core.graph6 import iter_graph6, parse_graph6, to_graph6


def complete(n):
    return new_graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


@pytest.mark.parametrize("g, expected", [
    (new_graph(1, []), b"@"),
    (new_graph(3, [(0, 1), (1, 2)]), b"Bg"),
    (complete(3), b"Bw"),
    (complete(4), b"C~"),
    (complete(5), b"D~{"),
])
def test_known_encodings(g, expected):
    assert to_graph6(g) == expected
    assert parse_graph6(expected) == g


def test_header_and_whitespace_are_accepted():
    assert parse_graph6(">>graph6<<D~{\n") == complete(5)


def test_long_form_order():
    g = new_graph(64, [(i, i + 1) for i in range(63)])
    data = to_graph6(g)
    assert data[0] == 126
    assert parse_graph6(data) == g


@pytest.mark.parametrize("text", [
    b"",
    b"A",      # truncated: one bit of payload missing
    b"Bww",    # trailing byte
    b"A@",     # padding bit set
    b"?",      # order zero
])
def test_malformed(text):
    with pytest.raises(Graph6Error):
        parse_graph6(text)


def test_out_of_range_byte():
    with pytest.raises(Graph6Error):
        parse_graph6(b"D~{\x20x")


def test_iter_reports_errors_per_line():
    stream = io.BytesIO(b"D~{\n\nnot-graph6\nBw\n")
    results = list(iter_graph6(stream))
    assert [lineno for lineno, _, _ in results] == [1, 3, 4]
    assert results[0][2] == complete(5)
    assert isinstance(results[1][2], Graph6Error)
    assert results[2][2] == complete(3)


@settings(max_examples=200, deadline=None)
@given(graphs(max_n=16))
def test_matches_networkx_encoder(g):
    expected = nx.to_graph6_bytes(to_nx(g), header=False).strip()
    assert to_graph6(g) == expected
    assert parse_graph6(expected) == g


@pytest.mark.parametrize("text", ["D~é", "Bw\u00a0"])
def test_non_ascii_text_is_a_graph6_error(text):
    with pytest.raises(Graph6Error):
        parse_graph6(text)


def test_order_above_native_limit():
    g = nx.path_graph(65)
    with pytest.raises(Graph6Error):
        parse_graph6(nx.to_graph6_bytes(g, header=False).strip())


@pytest.mark.slow
@settings(max_examples=10000, deadline=None)
@given(graphs(max_n=8))
def test_round_trip_on_small_orders(g):
    assert parse_graph6(to_graph6(g)) == g
