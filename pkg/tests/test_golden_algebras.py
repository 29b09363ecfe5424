import pytest

from canonical import canonicalize
from errors import NotASubchain, PreconditionError
from golden_algebras import (
    builtin,
    builtin_examples,
    chain_monoid,
    heyting_chain,
    integral_chain_pair,
    lukasiewicz_chain,
    lukasiewicz_pair,
)
from srl_monoid import classify


class TestBuiltins:
    def test_names_and_order(self):
        assert list(builtin_examples()) == ["ex2", "ex3", "diamond"]
        assert builtin("ex2").name == "ex2"

    def test_unknown_builtin(self):
        with pytest.raises(PreconditionError):
            builtin("ex9")


class TestRecipes:
    def test_lukasiewicz_chain_names(self):
        m = lukasiewicz_chain(4)
        assert m.names == ("0", "1/3", "2/3", "1")
        assert m.mul(1, 2) == 0 and m.mul(2, 2) == 1

    def test_lukasiewicz_pair_3_2_is_example_3(self, ex3):
        assert canonicalize(lukasiewicz_pair(3, 2)).code == canonicalize(ex3).code

    def test_full_pair_is_residuated_lattice(self):
        assert classify(lukasiewicz_pair(3, 3)).crl

    def test_non_dividing_pair(self):
        with pytest.raises(NotASubchain):
            lukasiewicz_pair(4, 3)

    def test_five_three_pair(self):
        s = lukasiewicz_pair(5, 3)
        assert sorted(s.q_set) == [0, 2, 4]
        assert classify(s).integral

    def test_heyting_chain(self):
        flags = classify(heyting_chain(3))
        assert flags.crl and flags.sr_lattice

    def test_integral_chain_pair_checks_q(self):
        m = lukasiewicz_chain(3)
        assert integral_chain_pair(m, [0, 2]).q_set == frozenset({0, 2})
        with pytest.raises(PreconditionError):
            integral_chain_pair(m, [1, 2])
        with pytest.raises(PreconditionError):
            integral_chain_pair(chain_monoid([[0, 0, 0], [0, 1, 2], [0, 2, 2]], unit=1), [0, 2])
