"""
Exhaustive verification runs: two-directional check of the characterization,
cospectral-mate search for characterized graphs, the nu = 2 candidate search,
and the per-graph lemma suite.
"""
import sys
import time
from collections import defaultdict
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple, TypeVar

import numpy as np
from tqdm import tqdm

from .canon import MAX_CANON_ORDER, are_isomorphic
from .classifier import MIN_ORDER, classify
from .console import debug, info
from .enumeration import enumerate_connected
from .errors import GraphError
from .exact import (
    char_poly_key,
    graph_char_poly,
    has_eigenvalue_multiplicity,
    multiplicity_of,
    second_largest_is_one,
    second_least_is_one,
)
from .family_manager import build_Gamma1, get_manager
from .graph import (
    Graph,
    complement,
    complement_clique_sizes,
    has_independent_set_of_size,
    independent_sets_of_size,
    is_connected,
)
from .graph6 import parse_graph6, to_graph6
from .spectral import interlacing_check, normalized_laplacian, symmetric_eigenvalues
from .structure import (
    coarsest_equitable_refinement,
    commonvertex_hypotheses,
    quotient_lifting_residual,
    twin_classes,
    verify_clique_lemma,
    verify_commonvertex_properties,
    verify_quotient_lifting,
)
from .types import (
    AssertionStatus,
    ClassificationReport,
    CommonVertexReport,
    ConjectureCandidate,
    CospectralMate,
    DSReport,
    FamilyRecord,
    LemmaOutcome,
    LemmaSuiteReport,
    Mismatch,
    TheoremCase,
    VerificationReport,
)

CASE_I_FAMILIES = {"CompleteTripartite", "KnMinusE"}
CASE_II_FAMILIES = {"G1", "G2", "G3"}

# Parameter sets of the universal-vertex template that fall outside G(n, n-3).
GAMMA1_SMALL_CASES = ((3, 2, 2), (3, 2, 1), (3, 1, 1), (2, 2, 1), (2, 1, 1))

DEFAULT_INTERLACING_SAMPLES = 20

T = TypeVar("T")


def run_parallel(fn: Callable[[bytes], T], graphs: Sequence[Graph], workers: int = 1,
                 progress: bool = False, desc: str = "graphs") -> List[T]:
    """Apply fn to the graph6 encoding of every graph, in input order."""
    items = [to_graph6(g) for g in graphs]
    show = progress and sys.stderr.isatty()
    if workers <= 1:
        return [fn(item) for item in tqdm(items, desc=desc, file=sys.stderr, disable=not show, leave=False)]
    chunk = max(1, len(items) // (workers * 8))
    with ProcessPoolExecutor(max_workers=workers) as pool:
        results = pool.map(fn, items, chunksize=chunk)
        return list(tqdm(results, total=len(items), desc=desc, file=sys.stderr, disable=not show, leave=False))


# ---------------------------------------------------------------------------
# Theorem verification
# ---------------------------------------------------------------------------

def _triple_reports(g: Graph) -> List[CommonVertexReport]:
    return [verify_commonvertex_properties(g, *triple) for triple in independent_sets_of_size(g, 3)]


def classify_with_triples(data: bytes) -> Tuple[ClassificationReport, List[CommonVertexReport]]:
    """Worker: classify one graph6 record; Case-ii graphs also get their triple reports."""
    g = parse_graph6(data)
    report = classify(g)
    triples = _triple_reports(g) if report.theorem_case == TheoremCase.CASE_II else []
    return report, triples


def _check_record(report: ClassificationReport, triples: List[CommonVertexReport]) -> List[str]:
    family = report.family.family if report.family else None
    case = report.theorem_case
    problems = []
    if report.inconsistency:
        problems.append(f"inconsistency: {report.inconsistency}")
    if (case == TheoremCase.CASE_I) != (family in CASE_I_FAMILIES):
        problems.append(f"{case.value} but recognized as {family}")
    if (case == TheoremCase.CASE_II) != (family in CASE_II_FAMILIES):
        problems.append(f"{case.value} but recognized as {family}")
    if case == TheoremCase.UNCHARACTERIZED_NU2 and report.independence_number != 2:
        problems.append(f"uncharacterized in-class graph with nu = {report.independence_number}")
    for t in triples:
        if not t.hypotheses_ok:
            problems.append(f"triple {list(t.triple)}: hypotheses fail ({'; '.join(t.hypothesis_violations)})")
        elif not t.passed:
            failed = [k for k, s in t.assertions.items() if s == AssertionStatus.FAIL]
            problems.append(f"triple {list(t.triple)}: common-vertex assertion(s) {', '.join(failed)} fail")
    if report.float_agrees is False:
        problems.append("float clustering disagrees with exact multiplicities")
    return problems


def verify_corpus(graphs: Iterable[Graph], n: Optional[int] = None, workers: int = 1,
                  progress: bool = False) -> VerificationReport:
    """Classify every graph and cross-check spectral membership against recognition."""
    started = time.perf_counter()
    graphs = [g for g in graphs if g.n >= MIN_ORDER and is_connected(g)]
    results = run_parallel(classify_with_triples, graphs, workers, progress, desc="classify")

    report = VerificationReport(n=n)
    counts: Dict[str, int] = {c.value: 0 for c in TheoremCase}
    for rec, triples in sorted(results, key=lambda r: r[0].graph6):
        counts[rec.theorem_case.value] += 1
        family = str(rec.family) if rec.family else None
        if rec.theorem_case == TheoremCase.CASE_I:
            report.case_i.append(FamilyRecord(graph6=rec.graph6, family=family))
        elif rec.theorem_case == TheoremCase.CASE_II:
            report.case_ii.append(FamilyRecord(graph6=rec.graph6, family=family))
        elif rec.theorem_case == TheoremCase.UNCHARACTERIZED_NU2:
            report.uncharacterized.append(rec.graph6)
        if rec.float_agrees is False:
            report.float_disagreements.append(rec.graph6)
        report.commonvertex_triples_checked += len(triples)
        for problem in _check_record(rec, triples):
            report.mismatches.append(Mismatch(graph6=rec.graph6, reason=problem))

    report.total = len(results)
    report.counts = counts
    report.elapsed_seconds = time.perf_counter() - started
    debug(f"verify n={n}: {report.total} graphs, {len(report.mismatches)} mismatches")
    return report


def verify_theorem(n: int, workers: int = 1, progress: bool = False) -> VerificationReport:
    graphs = list(enumerate_connected(n, progress=progress))
    info(f"Enumerated {len(graphs)} connected graphs on {n} vertices")
    return verify_corpus(graphs, n=n, workers=workers, progress=progress)


# ---------------------------------------------------------------------------
# Determined by spectrum
# ---------------------------------------------------------------------------

def classify_worker(data: bytes) -> ClassificationReport:
    return classify(parse_graph6(data))


def ds_check(n: int, workers: int = 1, graphs: Optional[Sequence[Graph]] = None,
             progress: bool = False) -> DSReport:
    """Bucket graphs by exact characteristic polynomial; characterized graphs must be alone."""
    if graphs is None:
        graphs = list(enumerate_connected(n, progress=progress))
    graphs = [g for g in graphs if g.n >= MIN_ORDER and is_connected(g)]
    reports = run_parallel(classify_worker, graphs, workers, progress, desc="ds-check")

    buckets: Dict[Tuple[str, ...], List[Graph]] = defaultdict(list)
    for g in graphs:
        buckets[char_poly_key(graph_char_poly(g))].append(g)

    characterized = 0
    counterexamples = []
    for g, rec in sorted(zip(graphs, reports), key=lambda pair: pair[1].graph6):
        if rec.theorem_case not in (TheoremCase.CASE_I, TheoremCase.CASE_II):
            continue
        characterized += 1
        mates = [
            h for h in buckets[char_poly_key(graph_char_poly(g))]
            if h is not g and not (g.n <= MAX_CANON_ORDER and are_isomorphic(g, h))
        ]
        if mates:
            counterexamples.append(CospectralMate(
                graph6=rec.graph6,
                family=str(rec.family) if rec.family else None,
                mates=sorted(to_graph6(h).decode("ascii") for h in mates),
            ))
    return DSReport(n=n, graphs=len(graphs), buckets=len(buckets),
                    characterized=characterized, counterexamples=counterexamples)


# ---------------------------------------------------------------------------
# nu = 2 gap
# ---------------------------------------------------------------------------

def may_have_nu2(g: Graph) -> bool:
    """nu(g) = 2 iff g is not complete and its complement is triangle-free."""
    return complement(g).num_edges > 0 and not has_independent_set_of_size(g, 3)


def conjecture_search(n: int, workers: int = 1, graphs: Optional[Sequence[Graph]] = None,
                      progress: bool = False) -> List[ConjectureCandidate]:
    """In-class graphs with second least eigenvalue != 1 and nu = 2."""
    if graphs is None:
        graphs = list(enumerate_connected(n, progress=progress))
    pool = [g for g in graphs if g.n >= MIN_ORDER and is_connected(g) and may_have_nu2(g)]
    debug(f"conjecture search n={n}: {len(pool)} of {len(graphs)} graphs pass the nu = 2 filter")
    reports = run_parallel(classify_worker, pool, workers, progress, desc="conjecture")
    found = [
        ConjectureCandidate(graph6=r.graph6, thetas=r.thetas, spectrum=r.spectrum)
        for r in reports
        if r.theorem_case == TheoremCase.UNCHARACTERIZED_NU2
    ]
    return sorted(found, key=lambda c: c.graph6)


def gamma1_small_cases() -> Dict[Tuple[int, int, int], bool]:
    """Membership in G(n, n-3) for the small universal-vertex templates; all expected False."""
    result = {}
    for params in GAMMA1_SMALL_CASES:
        g = build_Gamma1(*params)
        result[params] = has_eigenvalue_multiplicity(graph_char_poly(g), g.n - 3)
    return result


# ---------------------------------------------------------------------------
# Lemma suite
# ---------------------------------------------------------------------------

def _outcome(ok: bool, detail: str = "") -> LemmaOutcome:
    return LemmaOutcome(status=AssertionStatus.PASS if ok else AssertionStatus.FAIL, detail=detail)


def _not_applicable(detail: str) -> LemmaOutcome:
    return LemmaOutcome(status=AssertionStatus.NOT_APPLICABLE, detail=detail)


def _random_subsets(n: int, samples: int, rng: np.random.Generator) -> List[List[int]]:
    subsets = []
    for _ in range(samples):
        size = int(rng.integers(1, n + 1))
        subsets.append(sorted(int(v) for v in rng.choice(n, size=size, replace=False)))
    return subsets


def _quotient_outcome(g: Graph) -> LemmaOutcome:
    refinement = coarsest_equitable_refinement(g, [g.full_mask])
    ok = verify_quotient_lifting(g, refinement)
    detail = f"{len(refinement)} blocks, residual {quotient_lifting_residual(g, refinement):.2e}"
    # The named partition is in constructor vertex order, so it only applies to the built graph itself.
    tag = get_manager().recognize(g)
    if tag is not None and tag.family in CASE_II_FAMILIES:
        family = get_manager().get(tag.family)
        if family.build(*tag.params) == g:
            partition = family.lemma_partition(*tag.params)
            ok = ok and verify_quotient_lifting(g, partition)
            detail += f"; {tag} partition ({len(partition)} blocks)"
    return _outcome(ok, detail)


def run_lemmas(g: Graph, rng: np.random.Generator, samples: int = DEFAULT_INTERLACING_SAMPLES) -> LemmaSuiteReport:
    """All structural and spectral lemma checks on one connected graph."""
    if not is_connected(g) or g.n < 2:
        raise GraphError("the lemma suite needs a connected graph with at least 2 vertices")
    results: Dict[str, LemmaOutcome] = {}
    lap = normalized_laplacian(g)
    values = symmetric_eigenvalues(lap)
    poly = graph_char_poly(g)
    n = g.n

    subsets = _random_subsets(n, samples, rng)
    bad = [s for s in subsets if not interlacing_check(lap, s)]
    results["interlacing"] = _outcome(not bad, f"{len(subsets) - len(bad)}/{len(subsets)} subsets")

    bound = sum(b.bit_count() - 1 for b in twin_classes(g))
    ones = multiplicity_of(poly, 1)
    results["twin_points"] = _outcome(ones >= bound, f"bound {bound}, m(1) = {ones}")

    results["clique"] = _outcome(verify_clique_lemma(g))
    results["quotient_lifting"] = _quotient_outcome(g)

    parts = complement_clique_sizes(g)
    if n >= 3:
        bipartite = parts is not None and len(parts) == 2
        exact_eq = second_largest_is_one(poly)
        ok = values[1] >= 1 - 1e-9 and exact_eq == bipartite
        results["second_largest"] = _outcome(ok, f"rho_2 = {values[1]:.12g}, complete bipartite: {bipartite}")
    else:
        results["second_largest"] = _not_applicable("n < 3")

    if complement(g).num_edges > 0:
        multipartite = parts is not None
        exact_eq = second_least_is_one(poly)
        ok = values[n - 2] <= 1 + 1e-9 and exact_eq == multipartite
        results["second_least"] = _outcome(ok, f"rho_(n-1) = {values[n - 2]:.12g}, complete multipartite: {multipartite}")
    else:
        results["second_least"] = _not_applicable("complete graph")

    if n >= MIN_ORDER and has_eigenvalue_multiplicity(poly, n - 3) and not second_least_is_one(poly):
        rec = classify(g)
        results["theta_nu"] = _outcome(rec.inconsistency is None,
                                       f"theta = {rec.theta}, nu = {rec.independence_number}")
        triples = [t for t in independent_sets_of_size(g, 3) if not commonvertex_hypotheses(g, t)]
        if triples:
            reports = [verify_commonvertex_properties(g, *t) for t in triples]
            failed = [list(r.triple) for r in reports if not r.passed]
            results["common_vertex"] = _outcome(not failed, f"{len(triples)} triple(s), failing: {failed}")
        else:
            results["common_vertex"] = _not_applicable("no independent triple meets the hypotheses")
    else:
        results["theta_nu"] = _not_applicable("not in G(n, n-3) with second least eigenvalue != 1")
        results["common_vertex"] = _not_applicable("hypotheses do not hold")

    return LemmaSuiteReport(graph6=to_graph6(g).decode("ascii"), results=results)


def lemma_suite(graphs: Iterable[Graph], seed: int = 0,
                samples: int = DEFAULT_INTERLACING_SAMPLES) -> List[LemmaSuiteReport]:
    rng = np.random.default_rng(seed)
    return [run_lemmas(g, rng, samples) for g in graphs]
