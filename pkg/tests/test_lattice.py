import pytest

from errors import NotALattice, NotAPartialOrder, PreconditionError
from golden_algebras import diamond_lattice
from lattice import (
    automorphisms,
    bits,
    build_lattice,
    chain,
    is_chain,
    is_distributive,
    lattice_from_pairs,
    lattice_law_violations,
    max_of_subset,
    to_mask,
)


class TestBuildLattice:
    def test_chain_meet_is_min_join_is_max(self):
        lat = chain(3, names=("0", "e", "1"))
        for a in lat.elements:
            for b in lat.elements:
                assert lat.meet(a, b) == min(a, b)
                assert lat.join(a, b) == max(a, b)

    def test_diamond_bounds(self):
        lat = diamond_lattice()
        a, b = lat.index_of("a"), lat.index_of("b")
        assert lat.meet(a, b) == lat.index_of("0")
        assert lat.join(a, b) == lat.index_of("1")
        assert lat.top == 3 and lat.bottom == 0

    def test_missing_upper_bound(self):
        with pytest.raises(NotALattice) as exc:
            lattice_from_pairs(3, [(0, 1), (0, 2)])
        assert exc.value.bound == "least upper bound"
        assert exc.value.pair == (1, 2)

    def test_cycle_is_not_a_partial_order(self):
        with pytest.raises(NotAPartialOrder) as exc:
            lattice_from_pairs(2, [(0, 1), (1, 0)])
        assert exc.value.law == "antisymmetry"

    def test_irreflexive_matrix(self):
        with pytest.raises(NotAPartialOrder) as exc:
            build_lattice(2, [[True, True], [False, False]])
        assert exc.value.law == "reflexivity"

    def test_shape_and_names_are_checked(self):
        with pytest.raises(PreconditionError):
            build_lattice(2, [[True]])
        with pytest.raises(PreconditionError):
            build_lattice(2, [[True, True], [False, True]], names=("x", "x"))

    def test_hasse_and_full_relation_agree(self):
        hasse = lattice_from_pairs(3, [(0, 1), (1, 2)])
        full = lattice_from_pairs(3, [(0, 1), (1, 2), (0, 2)])
        assert hasse == full

    def test_index_of_falls_back_to_digits(self):
        lat = diamond_lattice()
        assert lat.index_of("2") == 2
        with pytest.raises(PreconditionError):
            lat.index_of("z")


class TestQueries:
    def test_is_chain(self):
        assert is_chain(chain(3))
        assert is_chain(chain(1))
        assert not is_chain(diamond_lattice())

    def test_max_of_subset(self):
        lat = chain(3, names=("0", "e", "1"))
        assert max_of_subset(lat, [0, 1]) == 1
        assert max_of_subset(lat, []) is None
        dia = diamond_lattice()
        assert max_of_subset(dia, [1, 2]) is None

    def test_laws_hold_on_built_lattices(self):
        assert lattice_law_violations(chain(4)) == []
        assert lattice_law_violations(diamond_lattice()) == []

    def test_distributive(self):
        assert is_distributive(diamond_lattice())
        m3 = lattice_from_pairs(5, [(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)])
        assert not is_distributive(m3)

    def test_automorphisms(self):
        assert len(automorphisms(chain(4))) == 1
        assert sorted(automorphisms(diamond_lattice())) == [(0, 1, 2, 3), (0, 2, 1, 3)]

    def test_masks(self):
        assert to_mask([0, 2]) == 5
        assert list(bits(5)) == [0, 2]
