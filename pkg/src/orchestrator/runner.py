"""
Orchestrator - Coordinates verification stages, single-graph analyses and q searches.
"""

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from datetime import datetime
from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence

import pandas as pd

from src.drg.classical import ClassicalParameters, classical_to_array
from src.drg.intersection_array import IntersectionArray
from src.drg.spectrum import spectrum_of_gamma
from src.numerics.algebraic import multisets_equal
from src.numerics.matrix import inertia
from src.numerics.rationals import format_rational, format_rationals, parse_rational
from src.oracle.families import build_family
from src.oracle.graph import Graph, all_pairs_distances, read_edge_list
from src.oracle.local import local_min_eigenvalue_bound_check
from src.oracle.matrices import explicit_spectrum, q_distance_matrix, semimetric_check
from src.oracle.regularity import verify_distance_regular
from src.oracle.witness import approximate_witness_vectors, negative_type_witness
from src.qdistance.bounds import krr_bound, quadrangle_equality_check
from src.qdistance.classical_type import classical_b_type_certificate, detect_classical_type
from src.qdistance.coefficients import q_coefficients
from src.qdistance.spectrum import generalized_spectrum, row_sum
from src.utils import CatalogEntry, CatalogLoader, Config, get_config, get_logger
from src.utils.errors import CertificateFailure, DrgqError, NotOnePositive, PreconditionNotMet, UsageError
from src.verifiers import STAGES, VerificationTarget

from .report import markdown_report, verify_frame

SCHEMA = "drgq/report-v1"


def _stage_config(config: Config) -> Dict[str, Any]:
    """Plain-dict stage settings; picklable for worker processes."""
    search = config.get_dict("search")
    return {
        "order_limit": int(config.get("numerics.order_limit", 64)),
        "interlacing_width": parse_rational(config.get("numerics.interlacing_width", "1/1000000")),
        "krr_max_order": int(search.get("krr_max_order", 64)),
        "krr_max_r": int(search.get("krr_max_r", 3)),
    }


def verify_target(entry: CatalogEntry, q_grid: Sequence[Fraction], checks: Sequence[str], stage_config: Dict[str, Any]) -> Dict[str, Any]:
    """Run the enabled stages on one catalog entry. Module-level so a process pool can run it."""
    result: Dict[str, Any] = {"name": entry.name, "family": entry.family, "array": entry.array, "stages": {}}
    try:
        target = VerificationTarget.from_entry(entry)
    except DrgqError as exc:
        result.update(status="error", error=f"{exc.code}: {exc}")
        return result
    result["n"] = target.ia.n
    for name in checks:
        verifier = STAGES[name](name, stage_config)
        result["stages"][name] = verifier.run(target, list(q_grid))
    statuses = [stage["status"] for stage in result["stages"].values()]
    if "error" in statuses:
        result["status"] = "error"
    elif "fail" in statuses:
        result["status"] = "fail"
    else:
        result["status"] = "pass"
    return result


def _failures(target: Dict[str, Any]) -> List[str]:
    """Failing invariants of one target, named stage/check."""
    if "error" in target and not target["stages"]:
        return [f"{target['name']}: {target['error']}"]
    out = []
    for stage, outcome in target["stages"].items():
        if outcome["status"] == "error":
            out.append(f"{target['name']} {stage}: {outcome.get('error')}")
        out.extend(f"{target['name']} {stage}/{c['name']}" for c in outcome["checks"] if not c["passed"])
    return out


class VerificationOrchestrator:
    """Runs the verification stages over catalog targets."""

    def __init__(self, config: Optional[Config] = None):
        """Initialize orchestrator."""
        self.config = config or get_config()
        self.logger = get_logger(
            "orchestrator",
            self.config.get("logging.output_dir", "logs"),
            enable_langfuse=self.config.get("logging.enable_langfuse", False),
            level=self.config.get("logging.level", "WARNING"),
            to_file=self.config.get("logging.file", False),
        )
        self.execution_trace: List[Dict[str, Any]] = []
        self.results: Dict[str, Dict[str, Any]] = {}

    def default_grid(self) -> List[Fraction]:
        return [parse_rational(q) for q in self.config.get("grids.q_test_grid")]

    def run(self, entries: Sequence[CatalogEntry], q_grid: Optional[Sequence[Fraction]] = None) -> Dict[str, Any]:
        """
        Verify every entry and assemble the summary in catalog order.

        Args:
            entries: Catalog entries to verify
            q_grid: Rational q values; the configured test grid when omitted

        Returns:
            Summary dict with per-target stage results and failing invariants
        """
        q_grid = list(q_grid) if q_grid else self.default_grid()
        checks = list(self.config.get("verification.checks"))
        unknown = [c for c in checks if c not in STAGES]
        if unknown:
            raise UsageError(f"unknown verification stage(s): {', '.join(unknown)}")
        stage_config = _stage_config(self.config)
        workers = int(self.config.get("verification.workers", 1))
        run_id = datetime.now().strftime("%Y%m%d_%H%M%S")
        self.logger.log_metrics({"verify_start": run_id, "targets": len(entries), "q_grid": format_rationals(q_grid)})

        trace_ids = {e.name: self.logger.log_check_start("verify", e.name, {"checks": checks}) for e in entries}
        if workers > 1 and len(entries) > 1:
            with ProcessPoolExecutor(max_workers=workers) as pool:
                futures = [pool.submit(verify_target, e, q_grid, checks, stage_config) for e in entries]
                targets = [f.result() for f in futures]
        else:
            targets = [verify_target(e, q_grid, checks, stage_config) for e in entries]

        failures: List[str] = []
        for target in targets:
            self._record_execution(target)
            target_failures = _failures(target)
            failures.extend(target_failures)
            trace_id = trace_ids[target["name"]]
            if target["status"] == "error" and "error" in target:
                self.logger.log_error("verify", trace_id, target["error"])
            self.logger.log_check_result("verify", trace_id, target["status"], target_failures or None)

        passed = sum(1 for t in targets if t["status"] == "pass")
        summary = {
            "schema": SCHEMA,
            "kind": "verify",
            "q_grid": format_rationals(q_grid),
            "checks": checks,
            "status": "pass" if passed == len(targets) else "fail",
            "passed": passed,
            "targets": targets,
            "failures": failures,
        }
        self.logger.log_metrics({"verify_end": run_id, "passed": passed, "failed": len(targets) - passed})
        self._save_outputs(summary)
        return summary

    def to_frame(self, summary: Dict[str, Any]) -> pd.DataFrame:
        return verify_frame(summary)

    def _record_execution(self, target: Dict[str, Any]):
        """Record target execution in trace."""
        self.execution_trace.append({
            "target": target["name"],
            "status": target["status"],
            "timestamp": datetime.now().isoformat(),
        })
        self.results[target["name"]] = target

    def _save_outputs(self, summary: Dict[str, Any]):
        """Save the summary JSON and markdown report when output paths are configured."""
        verify_path = self.config.get("output.verify_path")
        if verify_path:
            Path(verify_path).parent.mkdir(parents=True, exist_ok=True)
            with open(verify_path, "w") as f:
                json.dump({**summary, "execution_trace": self.execution_trace}, f, indent=2, default=str)
            self.logger.log_stage("output", f"saved verification summary to {verify_path}")

        report_path = self.config.get("output.report_path")
        if report_path:
            Path(report_path).parent.mkdir(parents=True, exist_ok=True)
            with open(report_path, "w") as f:
                f.write(markdown_report(summary))
            self.logger.log_stage("output", f"saved report to {report_path}")


@dataclass(frozen=True)
class AnalysisSource:
    """Exactly one input: an array, classical parameters, a family descriptor or an edge-list file."""

    kind: str
    value: str

    KINDS = ("array", "classical", "family", "edges")

    def __post_init__(self):
        if self.kind not in self.KINDS:
            raise UsageError(f"unknown source kind {self.kind!r}")


@dataclass
class ResolvedSource:
    ia: IntersectionArray
    params: Optional[ClassicalParameters] = None
    graph: Optional[Graph] = None


class AnalysisRunner:
    """Builds analysis reports and q searches for one graph."""

    def __init__(self, config: Optional[Config] = None):
        self.config = config or get_config()
        self.logger = get_logger(
            "analysis",
            self.config.get("logging.output_dir", "logs"),
            enable_langfuse=self.config.get("logging.enable_langfuse", False),
            level=self.config.get("logging.level", "WARNING"),
            to_file=self.config.get("logging.file", False),
        )
        self.order_limit = int(self.config.get("numerics.order_limit", 64))
        self.witness_digits = int(self.config.get("numerics.witness_digits", 6))

    def _catalog_params(self, family: str) -> Optional[ClassicalParameters]:
        try:
            entry = CatalogLoader(self.config.get("catalog.path", "data/catalog.yaml")).get(family)
        except (KeyError, DrgqError):
            return None
        return ClassicalParameters.parse(entry.classical) if entry.classical else None

    def resolve(self, source: AnalysisSource) -> ResolvedSource:
        """Parse the source; explicit graphs must be distance-regular."""
        if source.kind == "array":
            return ResolvedSource(IntersectionArray.parse(source.value))
        if source.kind == "classical":
            params = ClassicalParameters.parse(source.value)
            return ResolvedSource(classical_to_array(params), params)
        if source.kind == "family":
            graph = build_family(source.value)
            params = self._catalog_params(source.value)
        else:
            graph = read_edge_list(source.value)
            params = None
        ia = verify_distance_regular(graph)
        if ia is None:
            raise PreconditionNotMet(f"{source.value} is not distance-regular with diameter >= 2")
        return ResolvedSource(ia, params, graph)

    def analyze(self, source: AnalysisSource, qs: Sequence[Fraction] = ()) -> Dict[str, Any]:
        """Build the analysis report dict for one source and the requested q values."""
        trace_id = self.logger.log_check_start("analyze", source.value, {"kind": source.kind})
        resolved = self.resolve(source)
        ia = resolved.ia
        gamma = spectrum_of_gamma(ia)
        classical_types = [detect_classical_type(ia, theta).to_json() for theta in gamma.thetas[1:]]

        report: Dict[str, Any] = {
            "schema": SCHEMA,
            "kind": "analysis",
            "input": {source.kind: source.value},
            "intersection_array": str(ia),
            "n": ia.n,
            "diameter": ia.diameter,
            "k_i": list(ia.sizes),
            "bipartite": ia.is_bipartite,
            "classical_parameters": resolved.params.to_string() if resolved.params else None,
            "spectrum": gamma.to_json(),
            "classical_types": classical_types,
            "certificates": self._certificates(resolved),
            "krr_bounds": [krr_bound(ia, r).to_json() for r in range(2, int(self.config.get("search.krr_max_r", 3)) + 1)],
            "q": [],
        }

        dm = all_pairs_distances(resolved.graph) if resolved.graph is not None else None
        for q in qs:
            report["q"].append(self._q_block(resolved, gamma, dm, q))

        failed = [name for name, cert in report["certificates"].items() if cert["status"] == "fail"]
        self.logger.log_check_result("analyze", trace_id, "fail" if failed else "pass", failed or None)
        return report

    def _certificates(self, resolved: ResolvedSource) -> Dict[str, Dict[str, Any]]:
        certificates: Dict[str, Dict[str, Any]] = {}
        if resolved.params is not None:
            try:
                cert = classical_b_type_certificate(resolved.params)
                status = "pass" if cert.three_distinct else "fail"
                certificates["classical_b_type"] = {"status": status, **cert.to_json()}
            except CertificateFailure as exc:
                status = "not_applicable" if exc.clause == "diameter" else "fail"
                certificates["classical_b_type"] = {"status": status, "clause": exc.clause, "error": str(exc)}
        quad = quadrangle_equality_check(resolved.ia)
        if quad.applies:
            certificates["quadrangle_equality"] = {"status": "pass" if quad.holds else "fail", **quad.to_json()}
        return certificates

    def _q_block(self, resolved: ResolvedSource, gamma, dm, q: Fraction) -> Dict[str, Any]:
        ia = resolved.ia
        alpha = q_coefficients(q, ia.diameter).as_sequence()
        spectrum = generalized_spectrum(ia, alpha, gamma)
        merged = spectrum.merged()
        n_pos = spectrum.positive_count()
        n_zero = sum(m for eta, m in merged if eta.sign() == 0)
        block: Dict[str, Any] = {
            "q": format_rational(q),
            "spectrum": spectrum.to_json(),
            "distinct_count": len(merged),
            "positive_count": n_pos,
            "distinct_positive_count": spectrum.distinct_positive_count(),
            "one_positive": n_pos == 1,
            "has_zero": spectrum.has_zero(),
            "row_sum": format_rational(row_sum(ia, alpha)),
            "inertia": {"source": "analytic", "n_pos": n_pos, "n_zero": n_zero, "n_neg": ia.n - n_pos - n_zero},
        }
        if dm is None:
            return block

        matrix = q_distance_matrix(dm, q)
        block["inertia"] = {"source": "explicit", **inertia(matrix).to_dict()}
        nonneg, triangle = semimetric_check(dm, q)
        block["semimetric"] = {"nonnegative": nonneg, "triangle": triangle}
        if matrix.order <= self.order_limit:
            block["oracle_agreement"] = multisets_equal(merged, explicit_spectrum(matrix, self.order_limit))
        try:
            witness = negative_type_witness(matrix)
            # + 0.0 clears negative zeros
            vectors = approximate_witness_vectors(witness).round(self.witness_digits) + 0.0
            block["negative_type_witness"] = {
                "exists": True,
                "identities": witness.identities_hold(matrix),
                "approximate_vectors": {"approximate": True, "vectors": vectors.tolist()},
            }
        except NotOnePositive:
            block["negative_type_witness"] = {"exists": False}
        if block["inertia"]["n_pos"] == 1:
            block["local_bound"] = local_min_eigenvalue_bound_check(resolved.graph, q, dm)
        return block

    def search_q(self, source: AnalysisSource, qs: Sequence[Fraction]) -> Dict[str, Any]:
        """q values (0 excluded) at which the q-distance matrix has exactly one positive eigenvalue."""
        qs = [q for q in qs if q != 0]
        if source.kind in ("family", "edges"):
            graph = build_family(source.value) if source.kind == "family" else read_edge_list(source.value)
            dm = all_pairs_distances(graph)
            method = "explicit"
            counts = [inertia(q_distance_matrix(dm, q)).n_pos for q in qs]
        else:
            ia = self.resolve(source).ia
            gamma = spectrum_of_gamma(ia)
            method = "analytic"
            counts = [
                generalized_spectrum(ia, q_coefficients(q, ia.diameter).as_sequence(), gamma).positive_count()
                for q in qs
            ]
        found = [q for q, count in zip(qs, counts) if count == 1]
        self.logger.log_metrics({"search_q": source.value, "values": len(qs), "one_positive": len(found)})
        return {
            "schema": SCHEMA,
            "kind": "search",
            "source": source.value,
            "method": method,
            "q_values": format_rationals(qs),
            "one_positive": format_rationals(found),
        }


def catalog_listing(loader: CatalogLoader, tag: Optional[str] = None) -> List[Dict[str, Any]]:
    """Catalog entries with n and diameter derived from their arrays."""
    entries = loader.filter(tag) if tag else loader.load()
    rows = []
    for entry in entries:
        ia = IntersectionArray.parse(entry.array)
        rows.append({**entry.to_dict(), "n": ia.n, "diameter": ia.diameter})
    return rows
