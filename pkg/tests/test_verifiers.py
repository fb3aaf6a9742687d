"""
Verification stages run on single catalog targets.
"""

from fractions import Fraction

import pytest

from src.utils.data import CatalogEntry
from src.verifiers import STAGES, VerificationTarget
from src.verifiers.base import BaseVerifier, check

GRID = [Fraction(9, 10), Fraction(1), Fraction(2)]


def run_stage(stage, target, grid=GRID, **config):
    return STAGES[stage](stage, config).run(target, grid)


def failed(result):
    return [c["name"] for c in result["checks"] if not c["passed"]]


@pytest.fixture
def target(catalog):
    by_name = {entry.name: entry for entry in catalog}
    return lambda name: VerificationTarget.from_entry(by_name[name])


class TestTarget:
    def test_explicit_target(self, target):
        ico = target("icosahedron")
        assert ico.explicit and ico.graph.n == 12 and ico.dm.diameter == 3
        assert ico.analytic_spectrum(Fraction(1)) is ico.analytic_spectrum(Fraction(1))
        assert ico.q_inertia(Fraction(1)).n_pos == 1

    def test_analytic_only_target(self, target):
        dual = target("dual_polar:3,2")
        assert not dual.explicit
        assert dual.params.b == 2
        with pytest.raises(ValueError):
            dual.q_matrix(Fraction(1))


class TestBase:
    def test_check_and_summary(self):
        checks = [check("a", True), check("b", 0, "detail")]
        assert checks[1] == {"name": "b", "passed": False, "detail": "detail"}
        assert BaseVerifier.summarize(checks)["status"] == "fail"
        assert BaseVerifier.summarize(checks[:1])["status"] == "pass"
        assert BaseVerifier.summarize([])["status"] == "skipped"

    def test_errors_become_error_status(self, target):
        verifier = STAGES["oracle_agreement"]("oracle_agreement", {"order_limit": 5})
        result = verifier.run(target("icosahedron"), GRID)
        assert result["status"] == "error"
        assert result["error"].startswith("order_limit_exceeded")
        assert verifier.get_history()[0]["status"] == "error"


class TestStages:
    def test_regularity(self, target):
        result = run_stage("regularity", target("johnson:6,3"))
        assert result["status"] == "pass"
        names = [c["name"] for c in result["checks"]]
        assert names == [
            "spectrum_of_gamma",
            "classical_parameters",
            "distance_regular",
            "adjacency_spectrum",
            "snapshot_q1",
            "snapshot_q-1/2",
        ]

    def test_regularity_catches_a_wrong_family(self):
        broken = VerificationTarget.from_entry(CatalogEntry("bad", "9,4,1;1,4,9", family="petersen"))
        result = run_stage("regularity", broken)
        assert result["status"] == "fail"
        assert failed(result) == ["distance_regular", "adjacency_spectrum"]

    def test_regularity_catches_a_wrong_snapshot(self):
        entry = CatalogEntry("bad", "3,2;1,1", expected={"q1": {"15": 1, "0": 5, "-3": 4}})
        result = run_stage("regularity", VerificationTarget.from_entry(entry))
        assert failed(result) == ["snapshot_q1"]

    def test_oracle_agreement(self, target):
        result = run_stage("oracle_agreement", target("icosahedron"))
        assert result["status"] == "pass"
        assert result["one_positive"] == {"9/10": False, "1": True, "2": True}

    @pytest.mark.parametrize("stage", ["oracle_agreement", "rowsum", "local_bound"])
    def test_graph_stages_skip_analytic_targets(self, target, stage):
        result = run_stage(stage, target("dual_polar:3,2"))
        assert result["status"] == "skipped"
        assert result["reason"] == "no explicit construction"

    def test_metric(self, target):
        grid = [Fraction(-2), Fraction(-1), Fraction(-1, 2), Fraction(1, 2), Fraction(1)]
        result = run_stage("metric", target("hamming:3,2"), grid)
        assert result["status"] == "pass"
        assert any(c["name"] == "bipartite_minus_k q=-1/2" for c in result["checks"])
        assert any(c["name"] == "triangle q=-2" for c in result["checks"])

    def test_metric_on_analytic_target(self, target):
        result = run_stage("metric", target("dual_polar:3,2"), [Fraction(1), Fraction(-2)])
        assert result["status"] == "pass"
        assert not any(c["name"].startswith("nonnegative") for c in result["checks"])

    def test_classical_type(self, target):
        result = run_stage("classical_type", target("johnson:6,3"))
        assert result["status"] == "pass"
        assert result["classical_q"]["3"] == "1"
        assert "quadrangle_equality" in [c["name"] for c in result["checks"]]
        assert "b_type_certificate" in [c["name"] for c in result["checks"]]

    def test_classical_type_bipartite(self, target):
        result = run_stage("classical_type", target("hypercube:4"))
        assert result["status"] == "pass"
        assert result["classical_q"]["-4"] == "-1"

    def test_rowsum(self, target):
        result = run_stage("rowsum", target("petersen"), [Fraction(-1, 2), Fraction(1)])
        assert result["status"] == "pass"
        details = {c["name"]: c["detail"] for c in result["checks"]}
        assert details["equivalence q=1"] == "witness"
        assert details["standard_representation"] == "1"

    def test_local_bound(self, target):
        assert run_stage("local_bound", target("icosahedron"))["status"] == "pass"
        result = run_stage("local_bound", target("icosahedron"), [Fraction(1, 2)])
        assert result["status"] == "skipped"
        assert result["reason"] == "no q with exactly one positive eigenvalue"

    def test_krr(self, target):
        result = run_stage("krr", target("hamming:3,2"), krr_max_r=3)
        assert result["status"] == "pass"
        names = [c["name"] for c in result["checks"]]
        assert names == ["inequality r=2", "classical_q r=2", "search r=3"]
        assert set(result["bounds"]) == {"2", "3"}

    def test_krr_analytic_target_reports_bounds_only(self, target):
        result = run_stage("krr", target("dual_polar:3,2"))
        assert result["status"] == "pass" and result["checks"] == []
        assert set(result["bounds"]) == {"2", "3"}
