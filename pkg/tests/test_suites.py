from catalog import build_entry
from reports import render, summarize
from suites.algebra_suite import algebra_suite_passed, run_algebra_suite
from suites.full import (
    basis_cross_check,
    catalog_index_report,
    enumeration_soundness_report,
    ensure_catalog,
    full_suite_reports,
    recipe_algebras,
)


class TestAlgebraSuite:
    def test_golden_algebras(self, golden):
        for s in golden:
            reports = run_algebra_suite(s)
            failures = [(r.title, f.check) for r in reports for f in r.failures]
            assert failures == [], s.name

    def test_recipes(self):
        for s in recipe_algebras():
            assert algebra_suite_passed(s, verify=False), s.name

    def test_every_size_three_algebra(self, catalog3):
        for s in catalog3:
            assert algebra_suite_passed(s), s.name

    def test_report_titles_are_stable(self, ex2):
        titles = [r.title for r in run_algebra_suite(ex2)]
        assert titles[:2] == ["thm1-basis", "corollary-basis"]
        assert titles[-1] == "chain-variety"


class TestCatalogReports:
    def test_index_and_soundness(self, catalog3):
        entries = [build_entry(s) for s in catalog3]
        assert catalog_index_report(entries).passed
        report = enumeration_soundness_report(entries, 3, trials=5, seed=1)
        assert report.passed
        assert report.result("count/n3").passed
        assert report.result("contains/ex2").passed

    def test_basis_cross_check(self, catalog3):
        entries = [build_entry(s) for s in catalog3]
        report = basis_cross_check(entries, candidate_max=2)
        assert report.passed
        assert [r.check for r in report.results] == ["tables/n1", "tables/n2", "catalog"]

    def test_basis_cross_check_sweeps_every_size_three_monoid(self, catalog3):
        entries = [build_entry(s) for s in catalog3]
        report = basis_cross_check(entries, candidate_max=3)
        assert report.passed
        # six l-monoids on the 3-chain, 3**9 arrow tables over each
        assert report.result("tables/n3").detail == "118098 candidates"

    def test_ensure_catalog_builds_then_replays(self, tmp_path):
        built = ensure_catalog(2, tmp_path, verify=False, workers=1)
        replayed = ensure_catalog(2, tmp_path, verify=False, workers=1)
        assert [e.name for e in built] == [e.name for e in replayed]


class TestFullSuite:
    def test_full_suite_small(self, tmp_path):
        reports = full_suite_reports(max_size=2, catalog_dir=tmp_path, workers=1)
        stats = summarize(reports)
        assert stats["failed"] == 0
        assert "FAIL" not in render(reports)
