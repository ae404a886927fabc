import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from sympy import Poly, QQ, Rational
from sympy.polys.matrices import DomainMatrix

from conftest import connected_graphs
from core.errors import IsolatedVertexError
from core.exact import (
    X,
    char_poly_key,
    cospectral,
    exact_char_poly,
    exact_clusters,
    exact_multiplicities,
    factor_for_value,
    factors_with_multiplicity,
    graph_char_poly,
    has_eigenvalue_multiplicity,
    multiplicity_of,
    random_walk_laplacian,
    second_largest_is_one,
    second_least_is_one,
)
from core.family_manager import build_complete_graph, build_complete_multipartite, build_G2, build_kn_minus_e
from core.graph import new_graph
from core.spectral import normalized_laplacian, symmetric_eigenvalues


def cycle(n):
    return new_graph(n, [(i, (i + 1) % n) for i in range(n)])


def poly(expr):
    return Poly(expr, X, domain=QQ)


class TestCharPoly:
    def test_order_one(self):
        m = DomainMatrix([[QQ(1)]], (1, 1), QQ)
        assert exact_char_poly(m) == poly(X - 1)

    def test_k2(self):
        assert graph_char_poly(new_graph(2, [(0, 1)])) == poly(X**2 - 2 * X)

    def test_k5(self):
        assert graph_char_poly(build_complete_graph(5)) == poly(X * (X - Rational(5, 4)) ** 4)

    def test_random_walk_rows(self):
        rows = random_walk_laplacian(new_graph(3, [(0, 1), (1, 2)])).to_list()
        assert rows[1] == [QQ(-1, 2), QQ(1), QQ(-1, 2)]
        assert rows[0] == [QQ(1), QQ(-1), QQ(0)]

    def test_isolated_vertex(self):
        with pytest.raises(IsolatedVertexError):
            random_walk_laplacian(new_graph(2, []))

    def test_key_is_coefficient_tuple(self):
        assert char_poly_key(graph_char_poly(new_graph(2, [(0, 1)]))) == ("1", "-2", "0")


class TestMultiplicities:
    def test_k5(self):
        factors = exact_multiplicities(graph_char_poly(build_complete_graph(5)))
        assert [(f.coeffs, f.multiplicity) for f in factors] == [(["1", "-5/4"], 4), (["1", "0"], 1)]
        assert factors[0].rational_roots == ["5/4"]

    def test_g2(self):
        factors = exact_multiplicities(graph_char_poly(build_G2(2)))
        f = factor_for_value(factors, Rational(3, 2))
        assert f is not None and f.multiplicity == 4
        clusters = exact_clusters(factors)
        assert [m for _, m in clusters] == [4, 1, 1, 1]
        assert [v for v, _ in clusters] == pytest.approx([1.5, 0.75, 0.25, 0.0])

    def test_five_cycle(self):
        factors = exact_multiplicities(graph_char_poly(cycle(5)))
        assert sorted(f.multiplicity for f in factors) == [1, 2]
        double = next(f for f in factors if f.multiplicity == 2)
        assert double.degree == 2 and double.rational_roots == []
        assert sorted(double.approx_roots) == pytest.approx(sorted([(5 - 5 ** 0.5) / 4, (5 + 5 ** 0.5) / 4]))

    def test_factors_with_multiplicity_skips_bare_zero(self):
        factors = exact_multiplicities(graph_char_poly(build_complete_graph(5)))
        assert factors_with_multiplicity(factors, 1) == []
        assert len(factors_with_multiplicity(factors, 4)) == 1

    def test_has_eigenvalue_multiplicity(self):
        p = graph_char_poly(build_kn_minus_e(6))
        assert has_eigenvalue_multiplicity(p, 3)
        assert not has_eigenvalue_multiplicity(p, 2)
        # K2 + K2 + K3: zero is the only eigenvalue of multiplicity 3
        three_parts = graph_char_poly(new_graph(7, [(0, 1), (2, 3), (4, 5), (5, 6), (4, 6)]))
        assert not has_eigenvalue_multiplicity(three_parts, 3)
        assert has_eigenvalue_multiplicity(three_parts, 3, include_zero=True)
        assert has_eigenvalue_multiplicity(three_parts, 2)

    def test_multiplicity_of(self):
        p = graph_char_poly(build_complete_multipartite([1, 2, 2]))
        assert multiplicity_of(p, 1) == 2
        assert multiplicity_of(p, 3) == 0


class TestExtremeEigenvalues:
    def test_complete_multipartite_second_least(self):
        assert second_least_is_one(graph_char_poly(build_complete_multipartite([1, 2, 3])))
        assert not second_least_is_one(graph_char_poly(cycle(5)))
        assert not second_least_is_one(graph_char_poly(build_complete_graph(5)))

    def test_complete_bipartite_second_largest(self):
        assert second_largest_is_one(graph_char_poly(build_complete_multipartite([2, 3])))
        assert not second_largest_is_one(graph_char_poly(build_complete_multipartite([1, 2, 3])))


class TestCospectral:
    def test_identity(self):
        assert cospectral(cycle(5), cycle(5))

    def test_distinct_spectra(self):
        assert not cospectral(build_complete_graph(5), cycle(5))

    def test_different_orders(self):
        assert not cospectral(cycle(5), cycle(6))


@settings(max_examples=40, deadline=None)
@given(connected_graphs(max_n=8), st.randoms(use_true_random=False))
def test_relabeling_preserves_char_poly(g, rnd):
    perm = list(range(g.n))
    rnd.shuffle(perm)
    assert cospectral(g, g.relabel(perm))


@settings(max_examples=40, deadline=None)
@given(connected_graphs(max_n=8))
def test_roots_match_float_spectrum(g):
    roots = sorted(v for v, m in exact_clusters(exact_multiplicities(graph_char_poly(g))) for _ in range(m))
    values = np.sort(symmetric_eigenvalues(normalized_laplacian(g)))
    assert np.allclose(roots, values, atol=1e-6)
