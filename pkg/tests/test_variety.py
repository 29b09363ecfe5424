from congruences import Congruence
from golden_algebras import heyting_chain
from variety import (
    basis_verdicts,
    is_subdirectly_irreducible,
    laf1_suite,
    src_membership_report,
    src_membership_suite,
)


class TestSubdirectIrreducible:
    def test_simple_algebras(self, ex2, dia):
        for s in (ex2, dia):
            verdict = is_subdirectly_irreducible(s)
            assert verdict
            assert verdict.monolith == Congruence.full(s.n)

    def test_trivial_algebra_is_not_si(self, trivial):
        verdict = is_subdirectly_irreducible(trivial)
        assert not verdict
        assert verdict.monolith is None

    def test_four_element_boolean_algebra_is_not_si(self, dia):
        from golden_algebras import subresiduated_lattice

        boolean = subresiduated_lattice(dia.lattice, range(4))
        assert not is_subdirectly_irreducible(boolean)

    def test_two_element_chain(self):
        assert is_subdirectly_irreducible(heyting_chain(2))


class TestMembership:
    def test_verdicts(self, ex2, dia):
        assert set(basis_verdicts(ex2).values()) == {True}
        assert set(basis_verdicts(dia).values()) == {False}

    def test_reports(self, golden):
        for s in golden:
            assert src_membership_report(s).passed
            assert laf1_suite(s).passed

    def test_non_member_notes(self, dia):
        report = src_membership_report(dia)
        assert report.result("member").passed
        assert laf1_suite(dia).result("join-powers").detail == "C1 fails: not applicable"

    def test_catalog_suite_prefixes_names(self, catalog3):
        report = src_membership_suite(catalog3)
        assert report.passed
        assert all(r.check.startswith("n") for r in report.results)

    def test_catalog_membership_up_to_four(self, catalog4):
        report = src_membership_suite(catalog4)
        assert report.passed, report.failures
        members = [s for s in catalog4 if all(basis_verdicts(s).values())]
        assert members
        assert any(not all(basis_verdicts(s).values()) for s in catalog4)
