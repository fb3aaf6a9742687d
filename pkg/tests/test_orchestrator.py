"""
Orchestrator: verification sweeps, single-graph analyses, q searches and rendering.
"""

import json
from fractions import Fraction

import pytest

from src.numerics.rationals import parse_rational_range
from src.orchestrator import AnalysisRunner, AnalysisSource, VerificationOrchestrator, catalog_listing, verify_target
from src.orchestrator.report import format_value, markdown_report, render_analysis, render_search, render_verify
from src.orchestrator.runner import _stage_config
from src.utils.data import CatalogEntry, CatalogLoader
from src.utils.errors import PreconditionNotMet, UsageError

GRID = [Fraction(9, 10), Fraction(1), Fraction(2)]


def merged_values(block):
    return {e["eta"]: e["multiplicity"] for e in block["spectrum"]["merged"]}


@pytest.fixture
def loader():
    return CatalogLoader("data/catalog.yaml")


class TestVerifyTarget:
    def test_bad_array_is_an_error(self, isolated_config):
        result = verify_target(CatalogEntry("junk", "1,1;1,1"), GRID, ["regularity"], _stage_config(isolated_config))
        assert result["status"] == "error"
        assert result["error"].startswith("invalid_intersection_array")

    def test_wrong_family_fails(self, isolated_config):
        entry = CatalogEntry("bad", "9,4,1;1,4,9", family="petersen")
        result = verify_target(entry, GRID, ["regularity"], _stage_config(isolated_config))
        assert result["status"] == "fail"
        assert result["stages"]["regularity"]["status"] == "fail"


class TestVerificationOrchestrator:
    def test_run(self, isolated_config, loader):
        orchestrator = VerificationOrchestrator(isolated_config)
        summary = orchestrator.run([loader.get("icosahedron")], GRID)
        assert summary["status"] == "pass"
        assert summary["passed"] == 1 and summary["failures"] == []
        assert summary["q_grid"] == ["9/10", "1", "2"]
        assert summary["targets"][0]["n"] == 12
        assert [t["target"] for t in orchestrator.execution_trace] == ["icosahedron"]
        frame = orchestrator.to_frame(summary)
        assert list(frame.columns) == ["target", "n", "status", *summary["checks"]]

    def test_analytic_target_skips_graph_stages(self, isolated_config, loader):
        summary = VerificationOrchestrator(isolated_config).run([loader.get("dual_polar:3,2")], [Fraction(1)])
        stages = summary["targets"][0]["stages"]
        assert summary["status"] == "pass"
        assert {name for name, s in stages.items() if s["status"] == "skipped"} == {
            "oracle_agreement",
            "rowsum",
            "local_bound",
        }

    def test_failures_are_listed(self, isolated_config):
        entry = CatalogEntry("bad", "9,4,1;1,4,9", family="petersen")
        isolated_config.set("verification.checks", ["regularity"])
        summary = VerificationOrchestrator(isolated_config).run([entry], [Fraction(1)])
        assert summary["status"] == "fail"
        assert "bad regularity/distance_regular" in summary["failures"]
        assert "FAIL bad regularity/distance_regular" in render_verify(summary)

    def test_unknown_stage(self, isolated_config, loader):
        isolated_config.set("verification.checks", ["regularity", "bogus"])
        with pytest.raises(UsageError):
            VerificationOrchestrator(isolated_config).run([loader.get("petersen")], [Fraction(1)])

    def test_outputs_are_saved(self, isolated_config, loader, tmp_path):
        isolated_config.set("output.verify_path", str(tmp_path / "out" / "verify.json"))
        isolated_config.set("output.report_path", str(tmp_path / "out" / "report.md"))
        isolated_config.set("verification.checks", ["regularity", "oracle_agreement"])
        VerificationOrchestrator(isolated_config).run([loader.get("petersen")], [Fraction(1)])
        saved = json.loads((tmp_path / "out" / "verify.json").read_text())
        assert saved["kind"] == "verify" and len(saved["execution_trace"]) == 1
        report = (tmp_path / "out" / "report.md").read_text()
        assert report.startswith("# drgq Verification Report")
        assert "| petersen | 10 | PASS | pass | pass |" in report

    def test_markdown_lists_failures(self):
        summary = {
            "status": "fail",
            "q_grid": ["1"],
            "checks": ["regularity"],
            "targets": [{"name": "bad", "n": 20, "status": "fail", "stages": {"regularity": {"status": "fail"}}}],
            "failures": ["bad regularity/distance_regular"],
            "passed": 0,
        }
        markdown = markdown_report(summary)
        assert "## Failures" in markdown
        assert "- bad regularity/distance_regular" in markdown


class TestAnalysisRunner:
    def test_classical_source(self, isolated_config):
        report = AnalysisRunner(isolated_config).analyze(AnalysisSource("classical", "3,1,1,3"), [Fraction(1)])
        assert report["intersection_array"] == "{9,4,1;1,4,9}"
        assert report["classical_parameters"] == "3,1,1,3"
        assert report["certificates"]["classical_b_type"]["status"] == "pass"
        assert report["certificates"]["quadrangle_equality"]["status"] == "pass"
        block = report["q"][0]
        assert merged_values(block) == {"30": 1, "0": 14, "-6": 5}
        assert block["inertia"] == {"source": "analytic", "n_pos": 1, "n_zero": 14, "n_neg": 5}
        assert block["row_sum"] == "30"

    def test_diameter_two_certificate_is_not_applicable(self, isolated_config):
        report = AnalysisRunner(isolated_config).analyze(AnalysisSource("classical", "2,1,0,2"))
        assert report["certificates"]["classical_b_type"]["status"] == "not_applicable"
        assert report["q"] == []

    def test_family_source(self, isolated_config):
        report = AnalysisRunner(isolated_config).analyze(AnalysisSource("family", "petersen"), [Fraction(1)])
        block = report["q"][0]
        assert block["inertia"] == {"source": "explicit", "n_pos": 1, "n_zero": 4, "n_neg": 5}
        assert block["oracle_agreement"] is True
        witness = block["negative_type_witness"]
        assert witness["exists"] is True
        assert witness["identities"] is True
        assert witness["approximate_vectors"]["approximate"] is True
        assert block["local_bound"] is True
        assert block["semimetric"] == {"nonnegative": True, "triangle": True}

    def test_catalog_family_carries_classical_parameters(self, isolated_config):
        report = AnalysisRunner(isolated_config).analyze(AnalysisSource("family", "johnson:6,3"))
        assert report["classical_parameters"] == "3,1,1,3"

    def test_witness_vectors_are_approximate(self, isolated_config):
        report = AnalysisRunner(isolated_config).analyze(AnalysisSource("family", "petersen"), [Fraction(1)])
        vectors = report["q"][0]["negative_type_witness"]["approximate_vectors"]["vectors"]
        assert len(vectors) == 10
        assert all(len(row) == 10 and all(isinstance(v, float) for v in row) for row in vectors)
        # G_xx = theta/(2n) = 15/20
        for row in vectors:
            assert sum(v * v for v in row) == pytest.approx(0.75, abs=1e-4)
        assert "approximate vectors 10 x 10" in render_analysis(report)

    def test_edge_list_source(self, isolated_config, tmp_path):
        path = tmp_path / "cube.txt"
        edges = [(0, 1), (0, 2), (0, 4), (1, 3), (1, 5), (2, 3), (2, 6), (3, 7), (4, 5), (4, 6), (5, 7), (6, 7)]
        path.write_text("8 12\n" + "\n".join(f"{u} {v}" for u, v in edges) + "\n")
        report = AnalysisRunner(isolated_config).analyze(AnalysisSource("edges", str(path)))
        assert report["intersection_array"] == "{3,2,1;1,2,3}"
        assert report["bipartite"] is True

    def test_not_distance_regular(self, isolated_config):
        with pytest.raises(PreconditionNotMet):
            AnalysisRunner(isolated_config).analyze(AnalysisSource("family", "path:4"))

    def test_unknown_source_kind(self):
        with pytest.raises(UsageError):
            AnalysisSource("graph6", "Bw")

    def test_render_analysis(self, isolated_config):
        report = AnalysisRunner(isolated_config).analyze(AnalysisSource("array", "5,2,1;1,2,5"), [Fraction(1)])
        text = render_analysis(report)
        assert text.startswith("Intersection array {5,2,1;1,2,5}")
        assert "Spectrum of Gamma" in text
        assert "q = 1" in text


class TestSearch:
    def test_odd_polygon(self, isolated_config):
        result = AnalysisRunner(isolated_config).search_q(
            AnalysisSource("family", "cycle:5"), parse_rational_range("1/100:99/100:1/100")
        )
        assert result["method"] == "explicit"
        assert result["one_positive"]
        assert len(result["q_values"]) == 99

    def test_no_small_q_when_c2_is_two(self, isolated_config):
        result = AnalysisRunner(isolated_config).search_q(
            AnalysisSource("array", "4,2;1,2"), parse_rational_range("1/10:9/10:1/10")
        )
        assert result["method"] == "analytic"
        assert result["one_positive"] == []
        assert render_search(result).endswith("none")

    def test_zero_is_dropped(self, isolated_config):
        result = AnalysisRunner(isolated_config).search_q(
            AnalysisSource("array", "3,2;1,1"), [Fraction(-1), Fraction(0), Fraction(1)]
        )
        assert result["q_values"] == ["-1", "1"]
        assert "1" in result["one_positive"]


class TestCatalog:
    def test_listing(self, loader):
        rows = catalog_listing(loader)
        assert len(rows) == 15
        dual = next(r for r in rows if r["name"] == "dual_polar:3,2")
        assert dual["n"] == 135 and dual["diameter"] == 3 and dual["family"] is None

    def test_filters(self, loader):
        assert len(catalog_listing(loader, "classical")) == 9
        assert {r["name"] for r in catalog_listing(loader, "odd_polygon")} == {"cycle:5", "cycle:7"}
        assert all(r["family"] for r in catalog_listing(loader, "explicit"))

    def test_loader_lookup(self, loader):
        assert loader.get("petersen").array == "3,2;1,1"
        with pytest.raises(KeyError):
            loader.get("gosset")
        assert list(loader.to_frame().columns) == ["name", "family", "array", "classical", "tags"]


def test_format_value():
    assert format_value("3") == "3"
    assert format_value("-1/2") == "-1/2 (-0.500000)"
    assert format_value({"minimal_polynomial": [-5, 0, 1], "interval": ["2", "3"]}).endswith("(2.236068)")
