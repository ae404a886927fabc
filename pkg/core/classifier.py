"""
Decision procedure for membership in G(n, n-3) and the case split of the
characterization: exact path decides, float path is recorded as advisory.
"""
from fractions import Fraction
from typing import List

from .console import debug
from .errors import GraphError, InconsistencyError
from .exact import (
    exact_clusters,
    exact_multiplicities,
    factors_with_multiplicity,
    graph_char_poly,
    has_eigenvalue_multiplicity,
    second_least_is_one,
)
from .family_manager import recognize_family
from .graph import Graph, independence_number, is_connected
from .graph6 import to_graph6
from .spectral import DEFAULT_TOLERANCE, cluster_eigenvalues, clusters_agree, normalized_laplacian, symmetric_eigenvalues
from .types import ClassificationReport, ExactFactor, Spectrum, TheoremCase

MIN_ORDER = 5


def theta_candidates(factors: List[ExactFactor], k: int) -> List[str]:
    """Eigenvalues of multiplicity exactly k, largest first; irrational ones named by their factor."""
    found = []
    for f in factors_with_multiplicity(factors, k):
        rationals = {r: float(Fraction(r)) for r in f.rational_roots}
        for root in f.approx_roots:
            label = next((r for r, value in rationals.items() if abs(value - root) < 1e-9), None)
            if label == "0":
                continue  # zero shares the simple factor when k = 1
            found.append((root, label or f"{root:.12g} (root of [{', '.join(f.coeffs)}])"))
    found.sort(key=lambda item: item[0], reverse=True)
    return [label for _, label in found]


def classify(g: Graph, tol: float = DEFAULT_TOLERANCE, strict: bool = False) -> ClassificationReport:
    """
    Classify a connected graph with n >= 5.

    With strict=True a failed consistency check (theta = 1 or nu >= 4 for an
    in-class graph whose second least eigenvalue is not 1) raises
    InconsistencyError; otherwise it is recorded in the report.
    """
    if not is_connected(g):
        raise GraphError("classify() expects a connected graph")
    if g.n < MIN_ORDER:
        raise GraphError(f"classify() needs n >= {MIN_ORDER}, got {g.n}")

    poly = graph_char_poly(g)
    factors = exact_multiplicities(poly)
    exact = exact_clusters(factors)

    float_clusters, uncertain = cluster_eigenvalues(symmetric_eigenvalues(normalized_laplacian(g)), tol)
    float_agrees = None if uncertain else clusters_agree(float_clusters, exact)
    spectrum = Spectrum(
        order=g.n,
        clusters=exact if uncertain else float_clusters,
        exact=factors,
        uncertain=uncertain,
    )

    thetas = theta_candidates(factors, g.n - 3)
    in_class = bool(thetas)
    rho_one = second_least_is_one(poly)
    nu = independence_number(g)
    family = recognize_family(g)

    if not in_class:
        case = TheoremCase.NOT_IN_CLASS
    elif rho_one:
        case = TheoremCase.CASE_I
    elif nu != 2:
        case = TheoremCase.CASE_II
    else:
        case = TheoremCase.UNCHARACTERIZED_NU2

    inconsistency = None
    if in_class and not rho_one:
        problems = []
        if "1" in thetas:
            problems.append("theta = 1")
        if nu > 3:
            problems.append(f"nu = {nu} > 3")
        if problems:
            inconsistency = f"{', '.join(problems)} with second least eigenvalue != 1"
            debug(f"inconsistency on {to_graph6(g).decode()}: {inconsistency}")
            if strict:
                raise InconsistencyError(inconsistency)

    return ClassificationReport(
        graph6=to_graph6(g).decode("ascii"),
        n=g.n,
        in_class=in_class,
        theta=thetas[0] if thetas else None,
        thetas=thetas,
        rho_second_least_is_one=rho_one,
        independence_number=nu,
        family=family,
        theorem_case=case,
        spectrum=spectrum,
        float_agrees=float_agrees,
        mult_n_minus_2=has_eigenvalue_multiplicity(poly, g.n - 2),
        inconsistency=inconsistency,
    )
