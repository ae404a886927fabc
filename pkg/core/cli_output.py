"""
Rendering of CLI reports as JSON (canonical), CSV (one row per cluster or
record) or plain text. Every renderer returns the full document as a string.
"""
import csv
import io
import json
from typing import Any, Dict, List, Sequence, Tuple

from .types import (
    ClassificationReport,
    ConjectureCandidate,
    DSReport,
    LemmaSuiteReport,
    OutputFormat,
    Spectrum,
    VerificationReport,
)


def _json(data: Any) -> str:
    return json.dumps(data, indent=2, sort_keys=False) + "\n"


def _csv(header: Sequence[str], rows: List[Sequence[Any]]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def format_clusters(spectrum: Spectrum) -> str:
    return ", ".join(f"{value:.10g}^{mult}" for value, mult in spectrum.clusters)


def classification_dict(report: ClassificationReport) -> Dict[str, Any]:
    data = report.model_dump(mode="json", exclude={"spectrum", "family"})
    data["family"] = str(report.family) if report.family else None
    data["spectrum"] = report.spectrum.to_json_dict()
    return data


# ---------------------------------------------------------------------------
# Per-graph reports
# ---------------------------------------------------------------------------

def render_spectra(records: List[Tuple[str, Spectrum]], fmt: OutputFormat) -> str:
    if fmt == "json":
        return _json([{"graph6": g6, "spectrum": s.to_json_dict()} for g6, s in records])
    if fmt == "csv":
        rows = [(g6, value, mult) for g6, s in records for value, mult in s.clusters]
        return _csv(("graph6", "value", "multiplicity"), rows)
    lines = []
    for g6, s in records:
        flag = "  [uncertain: exact clusters]" if s.uncertain else ""
        lines.append(f"{g6}: {{{format_clusters(s)}}}{flag}")
        for f in s.exact or []:
            lines.append(f"    factor [{', '.join(f.coeffs)}] ^{f.multiplicity}")
    return "\n".join(lines) + "\n"


def render_classifications(reports: List[ClassificationReport], fmt: OutputFormat) -> str:
    if fmt == "json":
        return _json([classification_dict(r) for r in reports])
    if fmt == "csv":
        header = ("graph6", "n", "in_class", "theta", "rho_second_least_is_one",
                  "independence_number", "family", "theorem_case")
        rows = [
            (r.graph6, r.n, r.in_class, r.theta or "", r.rho_second_least_is_one,
             r.independence_number, str(r.family) if r.family else "", r.theorem_case.value)
            for r in reports
        ]
        return _csv(header, rows)
    lines = []
    for r in reports:
        family = str(r.family) if r.family else "-"
        theta = f" theta={r.theta}" if r.theta else ""
        lines.append(f"{r.graph6}: {r.theorem_case.value} family={family}{theta} nu={r.independence_number}")
        lines.append(f"    spectrum {{{format_clusters(r.spectrum)}}}")
        if r.inconsistency:
            lines.append(f"    INCONSISTENT: {r.inconsistency}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# Summaries
# ---------------------------------------------------------------------------

def render_verification(report: VerificationReport, fmt: OutputFormat, timing: bool = False) -> str:
    exclude = set() if timing else {"elapsed_seconds"}
    if fmt == "json":
        return _json(report.model_dump(mode="json", exclude=exclude))
    if fmt == "csv":
        rows = [(m.graph6, m.reason) for m in report.mismatches]
        return _csv(("graph6", "mismatch"), rows)
    lines = [f"n = {report.n if report.n is not None else 'corpus'}: {report.total} graphs"]
    lines += [f"  {case}: {count}" for case, count in report.counts.items()]
    lines.append("  Case-i: " + ", ".join(r.family or r.graph6 for r in report.case_i))
    lines.append("  Case-ii: " + ", ".join(r.family or r.graph6 for r in report.case_ii))
    lines.append(f"  common-vertex triples checked: {report.commonvertex_triples_checked}")
    lines.append(f"  mismatches: {len(report.mismatches)}")
    lines += [f"    {m.graph6}: {m.reason}" for m in report.mismatches]
    if timing and report.elapsed_seconds is not None:
        lines.append(f"  elapsed: {report.elapsed_seconds:.2f}s")
    return "\n".join(lines) + "\n"


def render_ds(report: DSReport, fmt: OutputFormat) -> str:
    if fmt == "json":
        return _json(report.model_dump(mode="json"))
    if fmt == "csv":
        rows = [(c.graph6, c.family or "", mate) for c in report.counterexamples for mate in c.mates]
        return _csv(("graph6", "family", "cospectral_mate"), rows)
    lines = [
        f"n = {report.n}: {report.graphs} graphs in {report.buckets} spectral classes",
        f"  characterized graphs: {report.characterized}",
        f"  counterexamples: {len(report.counterexamples)}",
    ]
    lines += [f"    {c.graph6} ({c.family}): {', '.join(c.mates)}" for c in report.counterexamples]
    return "\n".join(lines) + "\n"


def render_conjecture(candidates: List[ConjectureCandidate], fmt: OutputFormat) -> str:
    if fmt == "json":
        return _json([
            {"graph6": c.graph6, "thetas": c.thetas, "spectrum": c.spectrum.to_json_dict()}
            for c in candidates
        ])
    if fmt == "csv":
        rows = [(c.graph6, value, mult) for c in candidates for value, mult in c.spectrum.clusters]
        return _csv(("graph6", "value", "multiplicity"), rows)
    lines = [f"{len(candidates)} candidate(s)"]
    lines += [f"  {c.graph6}: theta {' | '.join(c.thetas)}; {{{format_clusters(c.spectrum)}}}" for c in candidates]
    return "\n".join(lines) + "\n"


def render_lemmas(reports: List[LemmaSuiteReport], fmt: OutputFormat) -> str:
    if fmt == "json":
        return _json([r.model_dump(mode="json") for r in reports])
    if fmt == "csv":
        rows = [(r.graph6, name, o.status.value, o.detail) for r in reports for name, o in r.results.items()]
        return _csv(("graph6", "lemma", "status", "detail"), rows)
    lines = []
    for r in reports:
        lines.append(f"{r.graph6}: {'pass' if r.passed else 'FAIL'}")
        for name, o in r.results.items():
            detail = f"  ({o.detail})" if o.detail else ""
            lines.append(f"    {name:<18} {o.status.value}{detail}")
    return "\n".join(lines) + "\n"


def render_graph6(lines: List[str]) -> str:
    return "".join(line + "\n" for line in lines)
