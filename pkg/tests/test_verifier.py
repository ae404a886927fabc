import numpy as np
import pytest

from core.enumeration import enumerate_connected
from core.errors import GraphError
from core.family_manager import (
    build_complete_graph,
    build_complete_multipartite,
    build_G1,
    build_G2,
    build_G3,
    build_kn_minus_e,
)
from core.graph import new_graph
from core.graph6 import parse_graph6, to_graph6
from core.types import AssertionStatus, TheoremCase
from core.verifier import (
    GAMMA1_SMALL_CASES,
    conjecture_search,
    ds_check,
    gamma1_small_cases,
    lemma_suite,
    may_have_nu2,
    run_lemmas,
    run_parallel,
    verify_corpus,
    verify_theorem,
)


def cycle(n):
    return new_graph(n, [(i, (i + 1) % n) for i in range(n)])


@pytest.fixture(scope="module")
def report6():
    return verify_theorem(6)


@pytest.fixture(scope="module")
def report7():
    return verify_theorem(7)


class TestVerifyTheorem:
    def test_n5(self):
        report = verify_theorem(5)
        assert report.passed
        assert report.total == 21
        assert report.case_ii == []
        assert sorted(r.family for r in report.case_i) == [
            "CompleteTripartite(1,1,3)",
            "CompleteTripartite(1,2,2)",
            "KnMinusE(5)",
        ]
        assert sum(report.counts.values()) == report.total

    def test_n6(self, report6):
        assert report6.passed
        assert report6.total == 112
        assert sorted(r.family for r in report6.case_i) == [
            "CompleteTripartite(1,1,4)",
            "CompleteTripartite(1,2,3)",
            "CompleteTripartite(2,2,2)",
            "KnMinusE(6)",
        ]
        assert [r.family for r in report6.case_ii] == ["G3(1)"]
        assert report6.commonvertex_triples_checked > 0

    def test_n7(self, report7):
        assert report7.passed
        assert report7.total == 853
        assert sorted(r.family for r in report7.case_ii) == ["G1(2)", "G2(2)"]
        assert len(report7.case_i) == 5
        assert report7.float_disagreements == []

    def test_uncharacterized_graphs_have_nu_two(self, report6):
        for g6 in report6.uncharacterized:
            assert may_have_nu2(parse_graph6(g6))

    def test_counts_by_case(self, report6):
        assert report6.counts[TheoremCase.CASE_I.value] == 4
        assert report6.counts[TheoremCase.CASE_II.value] == 1
        assert report6.counts[TheoremCase.UNCHARACTERIZED_NU2.value] == len(report6.uncharacterized)

    def test_elapsed_is_recorded(self):
        assert verify_theorem(5).elapsed_seconds >= 0

    @pytest.mark.slow
    def test_n8(self):
        report = verify_theorem(8)
        assert report.passed
        assert report.total == 11117
        assert report.case_ii == []
        assert len(report.case_i) == 6
        assert report.float_disagreements == []
        assert all(may_have_nu2(parse_graph6(g6)) for g6 in report.uncharacterized)


class TestVerifyCorpus:
    def test_small_and_disconnected_graphs_are_skipped(self):
        corpus = [build_G1(2), cycle(4), new_graph(6, [(0, 1), (2, 3), (4, 5)]), build_kn_minus_e(6)]
        report = verify_corpus(corpus)
        assert report.n is None
        assert report.total == 2
        assert report.passed
        assert [r.family for r in report.case_ii] == ["G1(2)"]
        assert [r.family for r in report.case_i] == ["KnMinusE(6)"]

    def test_relabeled_template_still_matches(self):
        g = build_G2(2).relabel([6, 5, 4, 3, 2, 1, 0])
        report = verify_corpus([g])
        assert report.passed
        assert [r.family for r in report.case_ii] == ["G2(2)"]

    def test_parallel_matches_sequential(self):
        graphs = list(enumerate_connected(5))
        one = verify_corpus(graphs, n=5, workers=1)
        two = verify_corpus(graphs, n=5, workers=2)
        assert one.model_dump(exclude={"elapsed_seconds"}) == two.model_dump(exclude={"elapsed_seconds"})


def test_run_parallel_preserves_order():
    graphs = [cycle(n) for n in range(3, 9)]
    assert run_parallel(parse_graph6, graphs, workers=2) == graphs
    assert run_parallel(len, graphs) == [len(to_graph6(g)) for g in graphs]


class TestDsCheck:
    def test_n6(self):
        report = ds_check(6)
        assert report.passed
        assert report.graphs == 112
        assert report.characterized == 5
        assert report.buckets <= report.graphs

    def test_n7(self):
        report = ds_check(7)
        assert report.passed
        assert report.characterized == 7

    @pytest.mark.slow
    def test_n8(self):
        report = ds_check(8)
        assert report.passed
        assert report.graphs == 11117
        assert report.characterized == 6

    def test_isomorphic_copies_are_not_mates(self):
        g = build_G1(2)
        report = ds_check(7, graphs=[g, g.relabel([3, 4, 5, 6, 0, 1, 2])])
        assert report.passed
        assert report.characterized == 2
        assert report.buckets == 1

    def test_explicit_corpus_without_characterized_graphs(self):
        report = ds_check(5, graphs=[cycle(5), build_complete_graph(5)])
        assert report.passed
        assert report.characterized == 0
        assert report.buckets == 2


class TestConjectureSearch:
    def test_n5_finds_the_pentagon(self):
        candidates = conjecture_search(5)
        assert len(candidates) >= 1
        for c in candidates:
            assert may_have_nu2(parse_graph6(c.graph6))
            assert c.thetas
        pentagons = conjecture_search(5, graphs=[cycle(5)])
        assert len(pentagons) == 1
        assert pentagons[0].thetas[0].startswith("1.809016994")

    def test_candidates_are_disjoint_from_characterized_graphs(self, report6):
        candidates = {c.graph6 for c in conjecture_search(6)}
        characterized = {r.graph6 for r in report6.case_i + report6.case_ii}
        assert candidates.isdisjoint(characterized)
        assert candidates == set(report6.uncharacterized)

    def test_n7_matches_uncharacterized_graphs(self, report7):
        candidates = conjecture_search(7)
        assert {c.graph6 for c in candidates} == set(report7.uncharacterized)
        characterized = {r.graph6 for r in report7.case_i + report7.case_ii}
        assert characterized.isdisjoint(c.graph6 for c in candidates)
        assert all(may_have_nu2(parse_graph6(c.graph6)) for c in candidates)

    @pytest.mark.slow
    def test_n8(self):
        candidates = conjecture_search(8)
        assert all(may_have_nu2(parse_graph6(c.graph6)) and c.thetas for c in candidates)

    def test_deterministic(self):
        assert conjecture_search(6) == conjecture_search(6)

    def test_templates_are_not_candidates(self):
        assert conjecture_search(0, graphs=[build_G1(2), build_G2(2), build_kn_minus_e(6)]) == []


@pytest.mark.parametrize("g, expected", [
    (cycle(5), True),
    (build_complete_graph(5), False),
    (build_complete_multipartite([2, 3]), False),
    (build_G1(2), False),
    (build_kn_minus_e(6), True),
])
def test_may_have_nu2(g, expected):
    assert may_have_nu2(g) == expected


def test_gamma1_small_cases_are_outside_the_class():
    result = gamma1_small_cases()
    assert set(result) == set(GAMMA1_SMALL_CASES)
    assert not any(result.values())


class TestLemmaSuite:
    @pytest.mark.parametrize("g", [
        build_G1(2),
        build_G2(2),
        build_G3(1),
        build_G3(2),
        build_kn_minus_e(6),
        build_complete_multipartite([1, 2, 3]),
        build_complete_multipartite([3, 4]),
        cycle(5),
        new_graph(2, [(0, 1)]),
    ])
    def test_families_pass(self, g):
        [report] = lemma_suite([g], seed=3, samples=10)
        assert report.passed, report.results
        assert report.graph6 == to_graph6(g).decode()

    def test_case_ii_template_runs_every_check(self):
        report = run_lemmas(build_G1(2), np.random.default_rng(0), samples=5)
        assert report.results["theta_nu"].status == AssertionStatus.PASS
        assert report.results["common_vertex"].status == AssertionStatus.PASS
        assert "G1(2) partition" in report.results["quotient_lifting"].detail

    def test_case_i_skips_theta_checks(self):
        report = run_lemmas(build_kn_minus_e(6), np.random.default_rng(0), samples=5)
        assert report.results["second_least"].status == AssertionStatus.PASS
        assert report.results["theta_nu"].status == AssertionStatus.NOT_APPLICABLE
        assert report.results["common_vertex"].status == AssertionStatus.NOT_APPLICABLE

    def test_complete_graph_has_no_second_least_check(self):
        report = run_lemmas(build_complete_graph(5), np.random.default_rng(0), samples=5)
        assert report.results["second_least"].status == AssertionStatus.NOT_APPLICABLE
        assert report.passed

    def test_disconnected_graph_is_rejected(self):
        with pytest.raises(GraphError):
            run_lemmas(new_graph(4, [(0, 1), (2, 3)]), np.random.default_rng(0))

    def test_seeded_runs_are_reproducible(self):
        graphs = [build_G2(2), cycle(6)]
        assert lemma_suite(graphs, seed=7) == lemma_suite(graphs, seed=7)

    def test_every_connected_graph_on_six_vertices(self):
        reports = lemma_suite(enumerate_connected(6), seed=1, samples=5)
        assert len(reports) == 112
        failing = [r.graph6 for r in reports if not r.passed]
        assert failing == []

    @pytest.mark.parametrize("n", [2, 3, 4, 5])
    def test_every_connected_graph_on_small_orders(self, n):
        reports = lemma_suite(enumerate_connected(n), seed=1, samples=5)
        assert [r.graph6 for r in reports if not r.passed] == []

    @pytest.mark.slow
    @pytest.mark.parametrize("n", [7, 8])
    def test_every_connected_graph_on_larger_orders(self, n):
        reports = lemma_suite(enumerate_connected(n), seed=1, samples=1)
        assert [r.graph6 for r in reports if not r.passed] == []
