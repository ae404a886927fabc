"""
Exact spectral path.

The random-walk Laplacian I - D^-1 A is similar to the normalized Laplacian
(conjugation by D^1/2) and has rational entries, so its characteristic
polynomial over QQ is the authoritative witness for multiplicities and
cospectrality.
"""
from __future__ import annotations

from functools import lru_cache
from typing import List, Optional, Tuple

import numpy as np
from sympy import Poly, QQ, Rational, symbols
from sympy.polys.matrices import DomainMatrix

from .errors import IsolatedVertexError
from .graph import Graph, bits
from .types import ExactFactor

X = symbols("x")

RationalMatrix = DomainMatrix
CharPoly = Poly


def random_walk_laplacian(g: Graph) -> RationalMatrix:
    if g.has_isolated_vertex():
        raise IsolatedVertexError("random-walk Laplacian needs every degree >= 1")
    rows = []
    for u in range(g.n):
        d = g.degree(u)
        row = [QQ(0)] * g.n
        row[u] = QQ(1)
        for v in bits(g.adj[u]):
            row[v] = QQ(-1, d)
        rows.append(row)
    return DomainMatrix(rows, (g.n, g.n), QQ)


def exact_char_poly(m: RationalMatrix) -> CharPoly:
    """det(xI - m) as a monic polynomial over QQ."""
    return Poly.from_list(m.charpoly(), X, domain=QQ)


@lru_cache(maxsize=4096)
def graph_char_poly(g: Graph) -> CharPoly:
    return exact_char_poly(random_walk_laplacian(g))


def char_poly_key(p: CharPoly) -> Tuple[str, ...]:
    """Hashable, order-preserving coefficient key for bucketing."""
    return tuple(str(c) for c in p.all_coeffs())


def _rational_str(r) -> str:
    return str(Rational(r))


def _approx_roots(f: Poly) -> List[float]:
    coeffs = [float(c) for c in f.all_coeffs()]
    if len(coeffs) == 2:
        return [-coeffs[1] / coeffs[0]]
    return sorted((float(r.real) for r in np.roots(coeffs)), reverse=True)


def exact_multiplicities(p: CharPoly) -> List[ExactFactor]:
    """Square-free decomposition p = prod f_i^e_i, descending by largest root."""
    _, parts = p.sqf_list()
    factors = []
    for f, e in parts:
        f = f.monic()
        rational_roots = []
        for g, _ in f.factor_list()[1]:
            if g.degree() == 1:
                a, b = g.all_coeffs()
                rational_roots.append(Rational(-b, a))
        rational_roots.sort(reverse=True)
        factors.append(ExactFactor(
            coeffs=[_rational_str(c) for c in f.all_coeffs()],
            multiplicity=e,
            degree=f.degree(),
            rational_roots=[_rational_str(r) for r in rational_roots],
            approx_roots=_approx_roots(f),
        ))
    factors.sort(key=lambda fac: fac.approx_roots[0], reverse=True)
    return factors


def exact_clusters(factors: List[ExactFactor]) -> List[Tuple[float, int]]:
    """Numeric (value, multiplicity) clusters implied by a square-free decomposition."""
    clusters = [(root, fac.multiplicity) for fac in factors for root in fac.approx_roots]
    clusters.sort(key=lambda c: c[0], reverse=True)
    return clusters


def multiplicity_of(p: CharPoly, value) -> int:
    """Exact multiplicity of a rational value as a root of p."""
    value = Rational(value)
    _, parts = p.sqf_list()
    for f, e in parts:
        if f.eval(value) == 0:
            return e
    return 0


def _count_strictly(p: CharPoly, value, below: bool) -> int:
    """Roots strictly below (or above) value, counted with multiplicity."""
    value = Rational(value)
    total = 0
    for f, e in p.sqf_list()[1]:
        closed = f.count_roots(None, value) if below else f.count_roots(value, None)
        if f.eval(value) == 0:
            closed -= 1
        total += e * closed
    return total


def second_least_is_one(p: CharPoly) -> bool:
    """rho_{n-1} = 1, decided exactly."""
    return multiplicity_of(p, 1) >= 1 and _count_strictly(p, 1, below=True) == 1


def second_largest_is_one(p: CharPoly) -> bool:
    """rho_2 = 1, decided exactly."""
    ones = multiplicity_of(p, 1)
    above = _count_strictly(p, 1, below=False)
    return ones >= 1 and above <= 1 and above + ones >= 2


def factors_with_multiplicity(factors: List[ExactFactor], k: int) -> List[ExactFactor]:
    """Factors of exponent k, less the bare factor x. For k = 1 the returned factor may still vanish at 0."""
    return [f for f in factors if f.multiplicity == k and f.coeffs != ["1", "0"]]


def has_eigenvalue_multiplicity(p: CharPoly, k: int, include_zero: bool = False) -> bool:
    """Some eigenvalue (nonzero unless include_zero) has multiplicity exactly k."""
    for f, e in p.sqf_list()[1]:
        if e != k:
            continue
        if include_zero or f.monic() != Poly(X, X, domain=QQ):
            return True
    return False


def factor_for_value(factors: List[ExactFactor], value) -> Optional[ExactFactor]:
    target = _rational_str(value)
    return next((f for f in factors if target in f.rational_roots), None)


def cospectral(g: Graph, h: Graph) -> bool:
    if g.n != h.n:
        return False
    return graph_char_poly(g) == graph_char_poly(h)
