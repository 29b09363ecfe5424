import random

import pytest

from canonical import CanonicalForm, canonical_algebra, canonicalize, relabel, signature
from errors import PreconditionError, SizeBound
from golden_algebras import heyting_chain, lukasiewicz_pair


class TestCanonicalize:
    def test_distinguishes_golden_algebras(self, golden):
        codes = {canonicalize(s).code for s in golden}
        assert len(codes) == 3

    def test_invariant_under_relabeling(self, golden):
        rng = random.Random(7)
        for s in golden:
            want = canonicalize(s)
            for _ in range(10):
                perm = list(range(s.n))
                rng.shuffle(perm)
                assert canonicalize(relabel(s, perm)) == want

    def test_recipe_matches_golden(self, ex3):
        assert canonicalize(lukasiewicz_pair(3, 2)).code == canonicalize(ex3).code

    def test_diamond_differs_from_four_chain(self, dia):
        assert canonicalize(dia).code != canonicalize(heyting_chain(4)).code

    def test_digest(self, ex2):
        form = canonicalize(ex2)
        assert len(form.digest) == 16
        assert CanonicalForm(form.size, form.code, order=()) == form

    def test_size_bound(self):
        with pytest.raises(SizeBound):
            canonicalize(heyting_chain(11))

    def test_unit_signature_sorts_first(self, ex2):
        assert signature(ex2, ex2.e)[0] == 0
        assert canonicalize(ex2).order[0] == ex2.e


class TestRelabel:
    def test_names_travel(self, ex2):
        copy = relabel(ex2, [2, 0, 1])
        assert copy.names == ("e", "1", "0")
        assert copy.e == 0
        assert copy.imp(1, 2) == 2  # 1->0 = 0

    def test_rejects_non_permutation(self, ex2):
        with pytest.raises(PreconditionError):
            relabel(ex2, [0, 0, 1])

    def test_canonical_algebra_layout(self, ex2):
        rep = canonical_algebra(ex2, name="rep")
        assert rep.names == ("0", "1", "2")
        assert rep.e == 0
        assert rep.name == "rep"
        assert canonicalize(rep) == canonicalize(ex2)
