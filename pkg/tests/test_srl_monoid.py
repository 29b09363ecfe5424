import pytest

from conftest import idx
from errors import BasisViolation, NotResiduated, PreconditionError, QNotSubalgebra
from lattice import chain
from lmonoid import meet_monoid
from srl_monoid import SrlMonoid, classify, q_names, residuate_from_Q, s_term, srl_from_arrow


class TestResiduateFromQ:
    def test_example_2_arrow(self, ex2):
        assert ex2.arrow == ((1, 1, 1), (0, 1, 1), (0, 0, 1))
        assert q_names(ex2) == ["0", "e"]

    def test_example_3_arrow(self, ex3):
        # x->y = 1 when x <= y, else 0
        assert ex3.arrow == ((2, 2, 2), (0, 2, 2), (0, 0, 2))
        assert ex3.imp(idx(ex3, "a"), idx(ex3, "a")) == idx(ex3, "1")
        assert ex3.imp(idx(ex3, "1"), idx(ex3, "a")) == idx(ex3, "0")

    def test_diamond_arrow(self, dia):
        assert dia.arrow == ((3, 3, 3, 3), (0, 3, 0, 3), (0, 0, 3, 3), (0, 0, 0, 3))
        assert [dia.box(a) for a in dia.elements] == [0, 0, 0, 3]

    def test_q_missing_unit(self, ex2):
        with pytest.raises(QNotSubalgebra) as exc:
            residuate_from_Q(ex2.monoid, {0})
        assert exc.value.closure == "unit"

    def test_q_without_maximum(self, ex2):
        with pytest.raises(NotResiduated) as exc:
            residuate_from_Q(ex2.monoid, {1, 2})
        assert exc.value.pair == (1, 0)
        assert exc.value.candidates == ()

    def test_q_of_top_only_on_two_chain(self):
        with pytest.raises(NotResiduated) as exc:
            residuate_from_Q(meet_monoid(chain(2)), {1})
        assert exc.value.pair == (1, 0)

    def test_q_out_of_range(self, ex2):
        with pytest.raises(PreconditionError):
            residuate_from_Q(ex2.monoid, {0, 1, 7})

    def test_derived_q_round_trips(self, golden):
        for s in golden:
            assert residuate_from_Q(s.monoid, s.q_set) == s


class TestSrlFromArrow:
    def test_accepts_residuated_tables(self, golden):
        for s in golden:
            assert srl_from_arrow(s.monoid, s.arrow) == s

    def test_constant_unit_arrow_fails_basis(self, ex2):
        arrow = [[1] * 3 for _ in range(3)]
        with pytest.raises(BasisViolation) as exc:
            srl_from_arrow(ex2.monoid, arrow)
        assert exc.value.identity == "3"
        assert exc.value.witness == {"x": "e", "y": "0"}

    def test_perturbed_entry_is_rejected(self, ex2):
        arrow = [list(row) for row in ex2.arrow]
        arrow[1][2] = 2
        with pytest.raises(BasisViolation):
            srl_from_arrow(ex2.monoid, arrow)

    def test_unchecked_keeps_shape_check(self, ex2):
        with pytest.raises(PreconditionError):
            SrlMonoid.unchecked(ex2.monoid, [[0, 0], [0, 0]])


class TestDerivedOperations:
    def test_box_powers(self, ex3):
        a = idx(ex3, "a")
        assert ex3.box_pow(0, a) == a
        assert ex3.box_pow(1, a) == ex3.box(a) == 0
        assert ex3.pow(a, 0) == ex3.e
        assert ex3.pow(a, 2) == 0
        assert ex3.pow(a, 50) == 0

    def test_negative_cone(self, ex2):
        assert [a for a in ex2.elements if ex2.is_negative(a)] == [0, 1]
        assert ex2.negative_mask == 0b011

    def test_s_term(self, ex2, dia):
        assert s_term(ex2, idx(ex2, "1"), idx(ex2, "e")) == idx(ex2, "0")
        assert s_term(dia, idx(dia, "a"), idx(dia, "b")) == idx(dia, "0")
        for a in dia.elements:
            assert s_term(dia, a, a) == dia.e


class TestClassify:
    def test_example_2(self, ex2):
        flags = classify(ex2)
        assert (flags.integral, flags.crl, flags.sr_lattice, flags.bounded) == (False, False, False, True)

    def test_example_3(self, ex3):
        flags = classify(ex3)
        assert flags.integral and not flags.crl and not flags.sr_lattice

    def test_diamond(self, dia):
        flags = classify(dia)
        assert flags.integral and flags.sr_lattice and not flags.crl
        assert flags.to_dict()["bounded"] is True
