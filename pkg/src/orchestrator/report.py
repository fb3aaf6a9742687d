"""
Rendering of analysis, verification, catalog and search reports.

Every renderer takes the JSON form of a report, so text tables and --json
output come from the same data. Exact values are printed first with a
decimal approximation in parentheses.
"""

from fractions import Fraction
from typing import Any, Dict, List, Sequence

import pandas as pd

from src.numerics.algebraic import AlgebraicNumber

DEFAULT_WIDTH = Fraction(1, 10**6)


def format_value(data: Any, width: Fraction = DEFAULT_WIDTH) -> str:
    """Exact value with a parenthesized 6-decimal approximation for non-integers."""
    value = AlgebraicNumber.from_json(data)
    if value.is_rational and value.value.denominator == 1:
        return str(value)
    return f"{value} ({value.approx(width):.6f})"


def _witness_line(witness: Dict[str, Any]) -> str:
    if not witness["exists"]:
        return "none"
    line = f"exists, identities = {witness['identities']}"
    vectors = witness.get("approximate_vectors", {}).get("vectors")
    if vectors:
        line += f", approximate vectors {len(vectors)} x {len(vectors[0])}"
    return line


def format_spectrum(merged: Sequence[Dict[str, Any]], width: Fraction = DEFAULT_WIDTH) -> str:
    return ", ".join(f"{format_value(e['eta'], width)}^{e['multiplicity']}" for e in merged)


def _section(title: str) -> List[str]:
    return ["", title, "-" * len(title)]


def render_analysis(report: Dict[str, Any], width: Fraction = DEFAULT_WIDTH) -> str:
    """Human-readable analysis report."""
    lines = [f"Intersection array {report['intersection_array']}"]
    lines.append(f"  input: {', '.join(f'{k}={v}' for k, v in report['input'].items())}")
    lines.append(f"  n = {report['n']}, diameter = {report['diameter']}, k_i = {report['k_i']}")
    if report.get("classical_parameters"):
        lines.append(f"  classical parameters (D, b, alpha, beta) = {report['classical_parameters']}")

    lines += _section("Spectrum of Gamma")
    rows = []
    types = {str(t["theta"]): t for t in report["classical_types"]}
    for entry in report["spectrum"]:
        ctype = types.get(str(entry["theta"]))
        rows.append({
            "theta": format_value(entry["theta"], width),
            "mult": entry["multiplicity"],
            "classical q": (ctype["q"] or "-") if ctype else "k",
            "note": ctype["diagnostic"] if ctype else "",
        })
    lines.append(pd.DataFrame(rows).to_string(index=False))

    if report["certificates"]:
        lines += _section("Certificates")
        for name, cert in report["certificates"].items():
            detail = cert.get("clause") or cert.get("theta") or ""
            lines.append(f"  {name}: {cert['status'].upper()} {detail}".rstrip())

    for block in report["q"]:
        lines += _section(f"q = {block['q']}")
        lines.append(f"  spectrum: {format_spectrum(block['spectrum']['merged'], width)}")
        lines.append(
            f"  distinct = {block['distinct_count']}, positive multiplicity = {block['positive_count']}, "
            f"distinct positive = {block['distinct_positive_count']}, one positive = {block['one_positive']}"
        )
        inertia = block["inertia"]
        lines.append(
            f"  inertia ({inertia['source']}): n_pos = {inertia['n_pos']}, "
            f"n_zero = {inertia['n_zero']}, n_neg = {inertia['n_neg']}"
        )
        lines.append(f"  row sum = {block['row_sum']}")
        for key in ("semimetric", "oracle_agreement", "local_bound"):
            if key in block:
                lines.append(f"  {key}: {block[key]}")
        if "negative_type_witness" in block:
            lines.append(f"  negative_type_witness: {_witness_line(block['negative_type_witness'])}")
    return "\n".join(lines)


def verify_frame(summary: Dict[str, Any]) -> pd.DataFrame:
    """One row per target, one column per stage."""
    stages = summary["checks"]
    rows = []
    for target in summary["targets"]:
        row = {"target": target["name"], "n": target.get("n"), "status": target["status"].upper()}
        for stage in stages:
            row[stage] = target["stages"].get(stage, {}).get("status", "-")
        rows.append(row)
    return pd.DataFrame(rows, columns=["target", "n", "status", *stages])


def render_verify(summary: Dict[str, Any]) -> str:
    lines = [verify_frame(summary).to_string(index=False)]
    for failure in summary["failures"]:
        lines.append(f"FAIL {failure}")
    lines.append(f"{summary['status'].upper()}: {summary['passed']}/{len(summary['targets'])} targets")
    return "\n".join(lines)


def render_catalog(entries: List[Dict[str, Any]]) -> str:
    frame = pd.DataFrame(entries, columns=["name", "family", "n", "diameter", "array", "classical", "tags"])
    return frame.fillna("").to_string(index=False)


def render_search(result: Dict[str, Any]) -> str:
    found = result["one_positive"]
    lines = [f"{result['source']} ({result['method']}): {len(found)} of {len(result['q_values'])} q values"]
    lines.append("  " + (", ".join(found) if found else "none"))
    return "\n".join(lines)


def markdown_report(summary: Dict[str, Any]) -> str:
    """Markdown summary of a verification sweep."""
    frame = verify_frame(summary)
    header = "| " + " | ".join(frame.columns) + " |"
    rule = "|" + "---|" * len(frame.columns)
    body = ["| " + " | ".join(str(v) for v in row) + " |" for row in frame.itertuples(index=False)]
    markdown = f"""# drgq Verification Report

**Status**: {summary['status'].upper()}
**Targets**: {len(summary['targets'])}
**q grid**: {', '.join(summary['q_grid'])}

## Results

{chr(10).join([header, rule, *body])}
"""
    if summary["failures"]:
        markdown += "\n## Failures\n\n"
        for failure in summary["failures"]:
            markdown += f"- {failure}\n"
    return markdown
