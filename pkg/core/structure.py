"""
Structural verifiers: twin classes, shared-neighborhood cliques, equitable
partitions of L(G), quotient and characteristic matrices, and the
common-vertex assertions for independent triples.

A Partition is a list of VertexSet bitsets. Blocks are kept in the order the
caller gives them; generated partitions are ordered by their smallest vertex.
"""
from __future__ import annotations

from itertools import permutations
from typing import Dict, List, Sequence, Tuple, Union

import numpy as np
from sympy import QQ, Rational
from sympy.polys.matrices import DomainMatrix

from .console import debug
from .errors import PartitionError
from .exact import (
    RationalMatrix,
    exact_char_poly,
    graph_char_poly,
    has_eigenvalue_multiplicity,
    multiplicity_of,
    random_walk_laplacian,
    second_least_is_one,
)
from .graph import Graph, VertexSet, bits, common_neighbors, independence_number, is_connected, is_independent, mask_of
from .spectral import EigenPair, SymMatrix, eigenpairs, eigenvector_residual, normalized_laplacian, symmetric_eigenvalues
from .types import AssertionStatus, CommonVertexReport

Partition = List[VertexSet]

EQUITABLE_TOL = 1e-10
CLIQUE_RESIDUAL_TOL = 1e-10
LIFTING_RESIDUAL_TOL = 1e-9
EIGENVALUE_MATCH_TOL = 1e-8


def partition_from_lists(blocks: Sequence[Sequence[int]]) -> Partition:
    return [mask_of(b) for b in blocks]


def partition_to_lists(p: Partition) -> List[List[int]]:
    return [list(bits(b)) for b in p]


def singleton_partition(n: int) -> Partition:
    return [1 << v for v in range(n)]


def check_partition(p: Partition, n: int) -> None:
    seen = 0
    for block in p:
        if block == 0:
            raise PartitionError("partition has an empty block")
        if block & seen:
            raise PartitionError("partition blocks overlap")
        seen |= block
    if seen != (1 << n) - 1:
        raise PartitionError(f"partition does not cover exactly the vertices 0..{n - 1}")


def _by_smallest_vertex(blocks: List[VertexSet]) -> Partition:
    return sorted(blocks, key=lambda b: b & -b)


def _classes_by_key(n: int, key) -> Partition:
    groups: Dict[object, VertexSet] = {}
    for v in range(n):
        k = key(v)
        groups[k] = groups.get(k, 0) | (1 << v)
    return _by_smallest_vertex(list(groups.values()))


# ---------------------------------------------------------------------------
# Twins and shared-neighborhood cliques
# ---------------------------------------------------------------------------

def twin_classes(g: Graph) -> Partition:
    """Maximal classes of vertices with equal open neighborhoods."""
    return _classes_by_key(g.n, lambda v: g.adj[v])


def verify_twin_lemma(g: Graph) -> bool:
    bound = sum(b.bit_count() - 1 for b in twin_classes(g))
    if bound == 0:
        return True
    return multiplicity_of(graph_char_poly(g), 1) >= bound


def shared_neighborhood_cliques(g: Graph) -> List[VertexSet]:
    """
    Maximal cliques whose members agree outside the clique. These are exactly
    the classes of equal closed neighborhoods N[v].
    """
    return _classes_by_key(g.n, lambda v: g.adj[v] | (1 << v))


def clique_vectors(block: VertexSet, n: int) -> List[np.ndarray]:
    """alpha_i = (e_{v_1} - e_{v_{i+1}}) / sqrt(2) for a clique v_1..v_q."""
    members = list(bits(block))
    vectors = []
    for other in members[1:]:
        alpha = np.zeros(n)
        alpha[members[0]] = 1.0
        alpha[other] = -1.0
        vectors.append(alpha / np.sqrt(2.0))
    return vectors


def verify_clique_lemma(g: Graph) -> bool:
    lap = normalized_laplacian(g)
    poly = graph_char_poly(g)
    for block in shared_neighborhood_cliques(g):
        q = block.bit_count()
        if q < 2:
            continue
        d = g.degree(next(bits(block)))
        value = Rational(d + 1, d)
        if multiplicity_of(poly, value) < q - 1:
            debug(f"clique lemma: multiplicity of {value} below {q - 1}")
            return False
        for alpha in clique_vectors(block, g.n):
            if eigenvector_residual(lap, EigenPair(float(value), alpha)) > CLIQUE_RESIDUAL_TOL:
                return False
    return True


# ---------------------------------------------------------------------------
# Equitable partitions and quotients
# ---------------------------------------------------------------------------

def _block_row_sums_float(m: np.ndarray, p: Partition) -> List[List[np.ndarray]]:
    cols = [list(bits(b)) for b in p]
    return [[m[np.ix_(ri, cj)].sum(axis=1) for cj in cols] for ri in cols]


def is_equitable(m: Union[SymMatrix, RationalMatrix], p: Partition) -> bool:
    """Every block-to-block submatrix has constant row sums."""
    order = m.shape[0]
    check_partition(p, order)
    if isinstance(m, DomainMatrix):
        rows = m.to_list()
        for ri in p:
            for cj in p:
                sums = {sum((rows[r][c] for c in bits(cj)), QQ(0)) for r in bits(ri)}
                if len(sums) > 1:
                    return False
        return True
    for row in _block_row_sums_float(np.asarray(m, dtype=float), p):
        for sums in row:
            if sums.max() - sums.min() > EQUITABLE_TOL:
                return False
    return True


def quotient_matrix(m: SymMatrix, p: Partition) -> np.ndarray:
    """q_ij = average row sum of block (i, j)."""
    check_partition(p, m.shape[0])
    sums = _block_row_sums_float(np.asarray(m, dtype=float), p)
    return np.array([[s.mean() for s in row] for row in sums])


def exact_quotient_matrix(m: RationalMatrix, p: Partition) -> RationalMatrix:
    check_partition(p, m.shape[0])
    rows = m.to_list()
    out = []
    for ri in p:
        size = ri.bit_count()
        out.append([
            sum((rows[r][c] for r in bits(ri) for c in bits(cj)), QQ(0)) / QQ(size)
            for cj in p
        ])
    return DomainMatrix(out, (len(p), len(p)), QQ)


def characteristic_matrix(p: Partition, n: int) -> np.ndarray:
    check_partition(p, n)
    s = np.zeros((n, len(p)))
    for j, block in enumerate(p):
        for v in bits(block):
            s[v, j] = 1.0
    return s


def quotient_eigenpairs(m: SymMatrix, p: Partition) -> List[EigenPair]:
    """
    Eigenpairs (lambda, alpha) of the quotient of an equitable partition of a
    symmetric matrix, via the symmetric form D_b^1/2 Q D_b^-1/2.
    """
    q = quotient_matrix(m, p)
    sizes = np.array([b.bit_count() for b in p], dtype=float)
    root = np.sqrt(sizes)
    sym = (root[:, None] * q) / root[None, :]
    sym = (sym + sym.T) / 2.0
    return [EigenPair(pair.value, pair.vector / root) for pair in eigenpairs(sym)]


def quotient_lifting_residual(g: Graph, p: Partition) -> float:
    """Largest ||L S alpha - lambda S alpha||_inf over the quotient eigenpairs, S alpha normalized."""
    lap = normalized_laplacian(g)
    if not is_equitable(lap, p):
        raise PartitionError("partition is not equitable for L(G)")
    s = characteristic_matrix(p, g.n)
    worst = 0.0
    for pair in quotient_eigenpairs(lap, p):
        lifted = s @ pair.vector
        lifted /= np.linalg.norm(lifted)
        worst = max(worst, eigenvector_residual(lap, EigenPair(pair.value, lifted)))
    return worst


def _degree_homogeneous(g: Graph, p: Partition) -> bool:
    return all(len({g.degree(v) for v in bits(b)}) == 1 for b in p)


def verify_quotient_lifting(g: Graph, p: Partition) -> bool:
    """
    Quotient eigenvalues occur in the spectrum of L(G) and lift through S to
    eigenvectors. On degree-homogeneous partitions the characteristic
    polynomial of the rational quotient must also divide that of L_rw(G).
    """
    check_partition(p, g.n)
    lap = normalized_laplacian(g)
    if not is_equitable(lap, p):
        raise PartitionError("partition is not equitable for L(G)")
    full = symmetric_eigenvalues(lap)
    for pair in quotient_eigenpairs(lap, p):
        if np.min(np.abs(full - pair.value)) > EIGENVALUE_MATCH_TOL:
            debug(f"quotient eigenvalue {pair.value:.12f} missing from spectrum")
            return False
    if quotient_lifting_residual(g, p) > LIFTING_RESIDUAL_TOL:
        return False
    if _degree_homogeneous(g, p):
        rw = random_walk_laplacian(g)
        quotient_poly = exact_char_poly(exact_quotient_matrix(rw, p))
        if not graph_char_poly(g).rem(quotient_poly).is_zero:
            debug("quotient characteristic polynomial does not divide char poly of L_rw")
            return False
    return True


def coarsest_equitable_refinement(g: Graph, seed: Partition) -> Partition:
    """
    Split seed by degree, then repeatedly by exact row sums of L_rw into each
    block until stable. The result is equitable for L(G).
    """
    check_partition(seed, g.n)
    rows = random_walk_laplacian(g).to_list()

    blocks: List[VertexSet] = []
    for block in seed:
        by_degree: Dict[int, VertexSet] = {}
        for v in bits(block):
            by_degree[g.degree(v)] = by_degree.get(g.degree(v), 0) | (1 << v)
        blocks.extend(by_degree[d] for d in sorted(by_degree))
    blocks = _by_smallest_vertex(blocks)

    while True:
        members = [list(bits(b)) for b in blocks]
        split: List[VertexSet] = []
        for block in members:
            groups: Dict[Tuple, VertexSet] = {}
            for v in block:
                signature = tuple(sum((rows[v][c] for c in other), QQ(0)) for other in members)
                groups[signature] = groups.get(signature, 0) | (1 << v)
            split.extend(groups.values())
        if len(split) == len(blocks):
            return _by_smallest_vertex(blocks)
        blocks = _by_smallest_vertex(split)


# ---------------------------------------------------------------------------
# Common-vertex assertions for an independent triple
# ---------------------------------------------------------------------------

def _status(checked: bool, ok: bool) -> AssertionStatus:
    if not checked:
        return AssertionStatus.NOT_APPLICABLE
    return AssertionStatus.PASS if ok else AssertionStatus.FAIL


def commonvertex_hypotheses(g: Graph, triple: Tuple[int, int, int]) -> List[str]:
    """Hypotheses of the common-vertex lemma that g and triple fail."""
    violations = []
    if not is_connected(g):
        violations.append("graph is disconnected")
    if len(set(triple)) != 3 or not is_independent(g, mask_of(triple)):
        violations.append("triple is not an independent set of three vertices")
    if g.has_isolated_vertex():
        return violations + ["graph has an isolated vertex"]
    poly = graph_char_poly(g)
    if g.n < 5 or not has_eigenvalue_multiplicity(poly, g.n - 3):
        violations.append("no eigenvalue of multiplicity n-3")
    if second_least_is_one(poly):
        violations.append("second least eigenvalue equals 1")
    if independence_number(g) != 3:
        violations.append("independence number is not 3")
    return violations


def verify_commonvertex_properties(g: Graph, u: int, v: int, w: int) -> CommonVertexReport:
    triple = (u, v, w)
    violations = commonvertex_hypotheses(g, triple)
    tmask = mask_of(triple)
    outside = [x for x in range(g.n) if not tmask >> x & 1]
    hits = {x: [a for a in triple if g.has_edge(x, a)] for x in outside}

    pair_hits = [x for x in outside if len(hits[x]) == 2]
    ok_i = all(common_neighbors(g, *hits[x]) == 1 << x for x in pair_hits)

    single_hits = [x for x in outside if len(hits[x]) == 1]
    ok_ii = all(
        g.adj[x] & ~(1 << hits[x][0]) == g.adj[hits[x][0]] & ~(1 << x)
        for x in single_hits
    )

    ok_iii = all(
        any(common_neighbors(g, a, b) for b in triple if b != a)
        for a in triple
    )

    all_three = [x for x in outside if len(hits[x]) == 3]
    ok_iv = len(all_three) <= 1

    d = g.degree
    checked_v = False
    ok_v = True
    for a, b, c in permutations(triple):
        if a > c:
            continue
        xs = [x for x in pair_hits if set(hits[x]) == {a, b}]
        ys = [y for y in pair_hits if set(hits[y]) == {b, c}]
        for x in xs:
            for y in ys:
                checked_v = True
                left = d(a) * d(x) - d(a) * d(b)
                right = d(y) * d(c) - d(c) * d(b)
                if not (g.has_edge(x, y) and d(b) ** 2 == left == right):
                    ok_v = False

    return CommonVertexReport(
        triple=triple,
        hypotheses_ok=not violations,
        hypothesis_violations=violations,
        assertions={
            "i": _status(bool(pair_hits), ok_i),
            "ii": _status(bool(single_hits), ok_ii),
            "iii": _status(True, ok_iii),
            "iv": _status(True, ok_iv),
            "v": _status(checked_v, ok_v),
        },
        witnesses={
            "i": pair_hits,
            "ii": single_hits,
            "iv": all_three,
        },
    )
