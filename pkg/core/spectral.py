"""
Float spectral path: normalized Laplacian, cyclic Jacobi eigensolver,
multiplicity clustering, shifted rank, interlacing and residual checks.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, List, Literal, Tuple, Union

import numpy as np

from .console import debug, warn
from .errors import ConvergenceError, DimensionError, GraphError, IsolatedVertexError
from .exact import exact_clusters, exact_multiplicities, graph_char_poly
from .graph import Graph, bits, is_connected
from .types import Spectrum

SymMatrix = np.ndarray

DEFAULT_TOLERANCE = 1e-8
GRAY_ZONE_FACTOR = 10.0
JACOBI_SWEEP_CAP = 100
INTERLACING_SLACK = 1e-9


@dataclass(frozen=True)
class EigenPair:
    value: float
    vector: np.ndarray


def normalized_laplacian(g: Graph) -> SymMatrix:
    if g.has_isolated_vertex():
        raise IsolatedVertexError("normalized Laplacian needs every degree >= 1")
    inv_sqrt = 1.0 / np.sqrt(np.array(g.degrees, dtype=float))
    m = np.eye(g.n)
    for u in range(g.n):
        for v in bits(g.adj[u]):
            m[u, v] = -inv_sqrt[u] * inv_sqrt[v]
    return m


def jacobi_eigh(m: SymMatrix) -> Tuple[np.ndarray, np.ndarray]:
    """Cyclic Jacobi. Returns eigenvalues descending and matching eigenvector columns."""
    a = np.array(m, dtype=float, copy=True)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise DimensionError(f"expected a square matrix, got shape {a.shape}")
    n = a.shape[0]
    v = np.eye(n)
    threshold = 1e-13 * n * max(1.0, float(np.linalg.norm(a)))

    for sweep in range(JACOBI_SWEEP_CAP + 1):
        off = float(np.linalg.norm(a - np.diag(np.diag(a))))
        if off < threshold:
            break
        if sweep == JACOBI_SWEEP_CAP:
            raise ConvergenceError(f"Jacobi did not converge in {JACOBI_SWEEP_CAP} sweeps (off = {off:.3e})")
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                tau = (a[q, q] - a[p, p]) / (2.0 * apq)
                t = (1.0 if tau >= 0 else -1.0) / (abs(tau) + np.sqrt(1.0 + tau * tau))
                c = 1.0 / np.sqrt(1.0 + t * t)
                s = t * c
                col_p, col_q = a[:, p].copy(), a[:, q].copy()
                a[:, p] = c * col_p - s * col_q
                a[:, q] = s * col_p + c * col_q
                row_p, row_q = a[p, :].copy(), a[q, :].copy()
                a[p, :] = c * row_p - s * row_q
                a[q, :] = s * row_p + c * row_q
                vec_p, vec_q = v[:, p].copy(), v[:, q].copy()
                v[:, p] = c * vec_p - s * vec_q
                v[:, q] = s * vec_p + c * vec_q

    values = np.diag(a).copy()
    order = np.argsort(-values, kind="stable")
    return values[order], v[:, order]


def symmetric_eigenvalues(m: SymMatrix) -> np.ndarray:
    values, _ = jacobi_eigh(m)
    trace = float(np.trace(m))
    if abs(values.sum() - trace) > 1e-9 * max(1, len(values)):
        warn(f"eigenvalue sum drifts from the trace by {values.sum() - trace:.3e}")
    return values


def eigenpairs(m: SymMatrix) -> List[EigenPair]:
    values, vectors = jacobi_eigh(m)
    return [EigenPair(float(values[i]), vectors[:, i].copy()) for i in range(len(values))]


def cluster_eigenvalues(values: Iterable[float], tol: float = DEFAULT_TOLERANCE) -> Tuple[List[Tuple[float, int]], bool]:
    """
    Group sorted (descending) values whose consecutive gaps are <= tol.
    The second result is True when some gap falls in the gray zone (tol, 10 tol).
    """
    ordered = sorted((float(x) for x in values), reverse=True)
    if not ordered:
        return [], False
    groups = [[ordered[0]]]
    uncertain = False
    for prev, cur in zip(ordered, ordered[1:]):
        gap = prev - cur
        if gap <= tol:
            groups[-1].append(cur)
        else:
            if gap < GRAY_ZONE_FACTOR * tol:
                uncertain = True
            groups.append([cur])
    return [(float(np.mean(g)), len(g)) for g in groups], uncertain


def spectrum(g: Graph, tol: float = DEFAULT_TOLERANCE, exact: bool = False,
             allow_disconnected: bool = False) -> Spectrum:
    """
    Clustered spectrum of L(g). A gray-zone gap escalates to the exact path:
    clusters are then taken from the square-free decomposition and the result
    stays flagged uncertain.
    """
    if not allow_disconnected and not is_connected(g):
        raise GraphError("spectrum() expects a connected graph (pass allow_disconnected=True)")
    values = symmetric_eigenvalues(normalized_laplacian(g))
    clusters, uncertain = cluster_eigenvalues(values, tol)
    factors = None
    if exact or uncertain:
        factors = exact_multiplicities(graph_char_poly(g))
        if uncertain:
            debug(f"gray-zone gap, escalating to exact clusters (n={g.n})")
            clusters = exact_clusters(factors)
    return Spectrum(order=g.n, clusters=clusters, exact=factors, uncertain=uncertain)


def rank_shifted(g: Graph, theta: float, tol: float = DEFAULT_TOLERANCE) -> int:
    """Numerical rank of L(g) - theta I."""
    m = normalized_laplacian(g) - theta * np.eye(g.n)
    singular = np.linalg.svd(m, compute_uv=False)
    return int(np.count_nonzero(singular > tol * g.n))


def _rows_list(rows: Union[int, Iterable[int]]) -> List[int]:
    if isinstance(rows, (int, np.integer)):
        return list(bits(int(rows)))
    return sorted(set(int(r) for r in rows))


def interlacing_check(m: SymMatrix, rows: Union[int, Iterable[int]]) -> bool:
    """lambda_{i+n-s}(A) <= lambda_i(M) <= lambda_i(A) for the principal submatrix M on rows."""
    idx = _rows_list(rows)
    n = m.shape[0]
    if not idx or idx[-1] >= n or idx[0] < 0:
        raise DimensionError(f"rows must be a nonempty subset of 0..{n - 1}")
    full = symmetric_eigenvalues(m)
    sub = symmetric_eigenvalues(m[np.ix_(idx, idx)])
    s = len(idx)
    for i in range(s):
        if not (full[i + n - s] - INTERLACING_SLACK <= sub[i] <= full[i] + INTERLACING_SLACK):
            return False
    return True


def eigenvector_residual(m: SymMatrix, pair: EigenPair) -> float:
    """||M v - lambda v||_inf."""
    vec = np.asarray(pair.vector, dtype=float)
    if vec.shape != (m.shape[0],):
        raise DimensionError(f"vector of length {vec.shape} for a matrix of order {m.shape[0]}")
    return float(np.max(np.abs(m @ vec - pair.value * vec)))


CrossPathVerdict = Literal["agree", "uncertain", "disagree"]


def clusters_agree(float_clusters: List[Tuple[float, int]], exact: List[Tuple[float, int]]) -> bool:
    if len(float_clusters) != len(exact):
        return False
    return all(
        fm == em and abs(fv - ev) <= 1e-6
        for (fv, fm), (ev, em) in zip(float_clusters, exact)
    )


def cross_path_check(g: Graph, tol: float = DEFAULT_TOLERANCE) -> CrossPathVerdict:
    """Compare float clustering with the exact square-free multiplicities."""
    values = symmetric_eigenvalues(normalized_laplacian(g))
    clusters, uncertain = cluster_eigenvalues(values, tol)
    if uncertain:
        return "uncertain"
    expected = exact_clusters(exact_multiplicities(graph_char_poly(g)))
    return "agree" if clusters_agree(clusters, expected) else "disagree"
