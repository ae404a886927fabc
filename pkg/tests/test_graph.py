from itertools import combinations

import networkx as nx
import pytest
from hypothesis import given, settings

from conftest import from_nx, graphs, to_nx
from core.errors import GraphError
from core.graph import (
    bits,
    clique_number,
    common_neighbors,
    complement,
    complement_clique_sizes,
    components,
    has_independent_set_of_size,
    independence_number,
    independent_sets_of_size,
    is_clique,
    is_connected,
    is_independent,
    mask_of,
    new_graph,
)


def path(n):
    return new_graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n):
    return new_graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n):
    return new_graph(n, list(combinations(range(n), 2)))


def k23():
    return new_graph(5, [(u, v) for u in (0, 1) for v in (2, 3, 4)])


class TestConstruction:
    def test_degrees_and_edges(self):
        g = path(4)
        assert g.degrees == (1, 2, 2, 1)
        assert g.edges() == [(0, 1), (1, 2), (2, 3)]
        assert g.num_edges == 3

    def test_duplicate_edges_merge(self):
        g = new_graph(3, [(0, 1), (1, 0), (0, 1)])
        assert g.num_edges == 1

    @pytest.mark.parametrize("n, edges", [
        (0, []),
        (65, []),
        (3, [(0, 3)]),
        (3, [(1, 1)]),
        (3, [(-1, 2)]),
    ])
    def test_invalid_input(self, n, edges):
        with pytest.raises(GraphError):
            new_graph(n, edges)

    def test_relabel_rejects_non_permutation(self):
        with pytest.raises(GraphError):
            path(3).relabel([0, 0, 1])

    def test_relabel_and_induced(self):
        g = path(3).relabel([2, 0, 1])
        assert g.has_edge(2, 0) and g.has_edge(0, 1) and not g.has_edge(2, 1)
        sub = cycle(5).induced([0, 1, 2])
        assert sub.edges() == [(0, 1), (1, 2)]

    def test_bitset_helpers(self):
        assert list(bits(0b10110)) == [1, 2, 4]
        assert mask_of([1, 2, 4]) == 0b10110
        assert list(bits(0)) == []


class TestConnectivity:
    def test_path_is_connected(self):
        assert is_connected(path(4))

    def test_disjoint_union_is_not(self):
        g = new_graph(5, [(0, 1), (2, 3), (3, 4), (2, 4)])
        assert not is_connected(g)
        assert components(g) == [0b00011, 0b11100]

    def test_single_vertex(self):
        assert is_connected(new_graph(1, []))


class TestIndependence:
    def test_complete_graph(self):
        assert independence_number(complete(6)) == 1

    def test_complete_bipartite(self):
        assert independence_number(k23()) == 3

    def test_cycle(self):
        assert independence_number(cycle(7)) == 3
        assert clique_number(cycle(5)) == 2

    def test_has_independent_set(self):
        assert not has_independent_set_of_size(complete(5), 2)
        assert has_independent_set_of_size(path(4), 2)
        with pytest.raises(GraphError):
            has_independent_set_of_size(path(4), 0)

    def test_independent_triples_are_listed_in_order(self):
        g = new_graph(4, [])
        assert list(independent_sets_of_size(g, 3)) == [(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)]

    def test_clique_and_independent_masks(self):
        g = k23()
        assert is_independent(g, 0b00011)
        assert not is_clique(g, 0b00011)
        assert is_clique(g, 0b00101)
        assert common_neighbors(g, 0, 1) == 0b11100


class TestComplementCliqueSizes:
    def test_complete_bipartite(self):
        assert complement_clique_sizes(k23()) == [2, 3]

    def test_cycle_is_not_multipartite(self):
        assert complement_clique_sizes(cycle(5)) is None

    def test_k_n_minus_e(self):
        g = new_graph(6, [e for e in combinations(range(6), 2) if e != (0, 1)])
        assert complement_clique_sizes(g) == [1, 1, 1, 1, 2]


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=9))
def test_degree_sum_is_twice_edge_count(g):
    assert sum(g.degrees) == 2 * g.num_edges


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=9))
def test_complement_is_an_involution(g):
    assert complement(complement(g)) == g


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=8))
def test_independence_number_matches_networkx(g):
    # maximum clique of the complement, computed independently
    co = nx.complement(to_nx(g))
    expected = max(len(c) for c in nx.find_cliques(co))
    assert independence_number(g) == expected
    assert has_independent_set_of_size(g, expected)
    assert not has_independent_set_of_size(g, expected + 1)


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=9))
def test_connectivity_matches_networkx(g):
    assert is_connected(g) == nx.is_connected(to_nx(g))
    assert len(components(g)) == nx.number_connected_components(to_nx(g))


def test_networkx_round_trip():
    h = nx.petersen_graph()
    g = from_nx(h)
    assert g.n == 10 and g.num_edges == 15
    assert independence_number(g) == 4
