import pytest

from congruences import Congruence, all_strongly_convex
from conftest import idx
from convex_generation import (
    generated_scs,
    generated_scs_oracle,
    generation_suite,
    lemma_pc1_check,
    meet_formula_counterexample,
    negative_cone,
    principal_scs,
    principal_suite,
    principal_theta_via_thmpc,
    scs_join,
    scs_lattice_ops_check,
    submonoid_closure,
)
from errors import GeneratorNotNegative


class TestGeneratedScs:
    def test_diamond_generator_a(self, dia):
        c = generated_scs(dia, [idx(dia, "a")])
        assert c.format(dia.names) == "{0,a,b,1}"
        assert c.witness_lines(dia.names) == [
            "0 <= e via h=a, n=1, m=1",
            "a <= e via h=a, n=0, m=1",
            "b <= e via h=a, n=1, m=1",
            "1 <= e via h=a, n=0, m=1",
        ]

    def test_unit_generates_singleton(self, dia, ex2):
        assert generated_scs(dia, [dia.e]).mask == 1 << dia.e
        assert generated_scs(ex2, [ex2.e]).mask == 0b010
        assert generated_scs(ex2, []).mask == 0b010

    def test_bottom_of_example_2_generates_everything(self, ex2):
        assert generated_scs(ex2, [0]).mask == 0b111

    def test_positive_generator_rejected(self, ex2):
        with pytest.raises(GeneratorNotNegative) as exc:
            generated_scs(ex2, [idx(ex2, "1")])
        assert exc.value.element == 2
        assert str(exc.value) == "generator 1 is not in the negative cone"

    def test_formula_matches_oracle(self, catalog3):
        for s in catalog3:
            scs = all_strongly_convex(s)
            for a in negative_cone(s):
                assert generated_scs(s, [a]).mask == generated_scs_oracle(s, [a], scs).mask

    def test_submonoid_closure(self, ex3):
        assert submonoid_closure(ex3, [idx(ex3, "a")]) == frozenset({0, 1, 2})

    def test_scs_join(self, ex2):
        scs = all_strongly_convex(ex2)
        assert scs_join(ex2, scs[0], scs[1], scs).mask == 0b111


class TestPrincipal:
    def test_principal_scs(self, dia):
        assert principal_scs(dia, idx(dia, "a")).mask == 0b1111
        assert principal_scs(dia, dia.e).mask == 0b1000

    def test_theta_formula(self, dia):
        a, b = idx(dia, "a"), idx(dia, "b")
        assert principal_theta_via_thmpc(dia, a, b) == Congruence.full(4)
        assert principal_theta_via_thmpc(dia, a, a) == Congruence.identity(4)

    def test_e_block_is_generated_by_s_term(self, ex2):
        assert lemma_pc1_check(ex2, idx(ex2, "1"), idx(ex2, "e")).passed

    def test_principal_suite_over_catalog(self, catalog4):
        for s in catalog4:
            report = principal_suite(s, verify=True)
            assert report.passed, (s.name, report.failures)


class TestScsLattice:
    def test_meet_counterexample_on_diamond(self, dia):
        assert meet_formula_counterexample(dia) == (idx(dia, "a"), idx(dia, "b"))

    def test_diamond_report(self, dia):
        report = scs_lattice_ops_check(dia)
        assert report.passed
        assert "counterexample a=a b=b" in report.result("meet-formula").detail

    def test_meet_formula_strict_on_chains(self, ex2, ex3):
        for s in (ex2, ex3):
            assert meet_formula_counterexample(s) is None
            assert scs_lattice_ops_check(s).passed

    def test_lattice_ops_over_catalog(self, catalog4):
        for s in catalog4:
            report = scs_lattice_ops_check(s)
            assert report.passed, (s.name, report.failures)

    def test_generation_suite_over_catalog(self, catalog4):
        for s in catalog4:
            report = generation_suite(s)
            assert report.passed, (s.name, report.failures)
