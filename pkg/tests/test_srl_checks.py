import pytest

from congruences import open_lattice_filters
from golden_algebras import heyting_chain, lukasiewicz_pair
from srl_checks import (
    SRL_CORE_SUITES,
    basis_verdicts_agree,
    definition_check,
    lemma_l1_suite,
    q_reduct_is_crl,
    remon_suite,
    residuation_equivalence_check,
    round_trip_check,
    sg0_suite,
    verify_basis_corollary,
    verify_basis_thm1,
    weak_residuation_suite,
)
from srl_monoid import SrlMonoid


class TestBases:
    def test_thm1_report_shape(self, ex2):
        report = verify_basis_thm1(ex2)
        assert report.passed
        assert report.title == "thm1-basis"
        assert [r.check for r in report.results][0] == "l-monoid"
        assert len(report.results) == 7

    def test_corollary_report_shape(self, dia):
        report = verify_basis_corollary(dia)
        assert report.passed
        assert len(report.results) == 9

    def test_verdicts_agree_on_catalog(self, catalog3):
        assert all(basis_verdicts_agree(s) for s in catalog3)


class TestDefinition:
    def test_golden_arrows_are_maxima(self, golden):
        for s in golden:
            assert definition_check(s).passed, s.name

    def test_constant_unit_arrow(self, ex2):
        s = SrlMonoid.unchecked(ex2.monoid, [[1] * 3 for _ in range(3)])
        result = definition_check(s).result("arrow-is-max")
        assert not result.passed
        assert result.witness == {"a": "e", "b": "0"}


class TestArrowLaws:
    def test_every_law_holds(self, golden):
        for s in golden:
            report = lemma_l1_suite(s)
            assert report.passed, s.name
            assert [r.check for r in report.results] == ["1", "2", "3", "4", "5", "6", "7"]


class TestWeakResiduation:
    def test_example_2_converse_fails_and_is_not_crl(self, ex2):
        report = weak_residuation_suite(ex2)
        assert report.passed
        assert report.result("converse-iff-crl").detail.startswith("converse holds=False crl=False")

    def test_heyting_chain_converse_holds(self):
        report = weak_residuation_suite(heyting_chain(3))
        assert report.passed
        assert report.result("converse-iff-crl").detail == "converse holds=True crl=True"

    def test_residuation_equivalence(self, ex2):
        report = residuation_equivalence_check(ex2)
        assert report.passed
        assert report.result("equivalence").detail == "x*(x->y)<=y: True, a<=b->c=>b*a<=c: True"


class TestPowersAndBoxes:
    def test_box_products_default_depth(self, ex3):
        report = sg0_suite(ex3)
        assert report.passed
        assert [r.check for r in report.results] == [
            "fixed/1", "bound/1", "fixed/2", "bound/2", "fixed/3", "bound/3",
        ]

    @pytest.mark.parametrize("k", [1, 2])
    def test_box_products_shallow(self, dia, k):
        assert len(sg0_suite(dia, k).results) == 2 * k

    def test_antitone_powers(self, golden):
        for s in golden + [lukasiewicz_pair(5, 3)]:
            report = remon_suite(s)
            assert report.passed, s.name
            assert [r.check for r in report.results] == ["powers", "box-powers", "stabilization"]


class TestQ:
    def test_round_trip(self, golden):
        for s in golden:
            assert round_trip_check(s).result("arrow-identical").passed

    def test_q_reduct(self, golden):
        for s in golden:
            report = q_reduct_is_crl(s)
            assert report.passed, s.name
            assert [r.check for r in report.results] == ["closed", "residuated"]

    def test_core_suites_pass_over_catalog(self, catalog3):
        for s in catalog3:
            for suite in SRL_CORE_SUITES:
                assert suite(s).passed, (s.name, suite.__name__)


class TestOpenLatticeFilters:
    def test_diamond(self, dia):
        # box(a) = box(b) = 0, so only the trivial filters survive
        assert [h.mask for h in open_lattice_filters(dia)] == [0b1000, 0b1111]

    def test_example_2(self, ex2):
        assert [h.mask for h in open_lattice_filters(ex2)] == [0b110, 0b111]
