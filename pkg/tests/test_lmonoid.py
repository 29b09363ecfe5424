import pytest

from errors import NotAnLMonoid, PreconditionError
from golden_algebras import diamond_lattice
from lattice import chain, lattice_from_pairs
from lmonoid import build_lmonoid, meet_monoid, verify_lmonoid


class TestBuildLMonoid:
    def test_example_tables_pass(self):
        ex2 = build_lmonoid(chain(3, names=("0", "e", "1")), [[0, 0, 0], [0, 1, 2], [0, 2, 2]], unit=1)
        ex3 = build_lmonoid(chain(3, names=("0", "a", "1")), [[0, 0, 0], [0, 0, 1], [0, 1, 2]], unit=2)
        assert verify_lmonoid(ex2).passed
        assert verify_lmonoid(ex3).passed

    def test_group_table_fails_join_distribution(self):
        with pytest.raises(NotAnLMonoid) as exc:
            build_lmonoid(chain(2), [[1, 0], [0, 1]], unit=1)
        assert exc.value.law == "join-distribution"

    def test_report_carries_first_witness(self):
        from lmonoid import CommutativeLMonoid

        lat = chain(2)
        m = CommutativeLMonoid(lattice=lat, prod=((1, 0), (0, 1)), unit=1)
        report = verify_lmonoid(m)
        failed = report.result("join-distribution")
        assert not failed.passed
        assert failed.witness == {"a": "0", "b": "1", "c": "0"}

    def test_non_commutative_table(self):
        with pytest.raises(NotAnLMonoid) as exc:
            build_lmonoid(chain(3), [[0, 0, 0], [1, 1, 1], [0, 1, 2]], unit=2)
        assert exc.value.law == "commutativity"

    def test_bad_shape(self):
        with pytest.raises(PreconditionError):
            build_lmonoid(chain(2), [[0, 0]], unit=1)
        with pytest.raises(PreconditionError):
            build_lmonoid(chain(2), [[0, 0], [0, 5]], unit=1)

    def test_meet_monoid_on_diamond(self):
        m = meet_monoid(diamond_lattice())
        assert m.unit == 3
        assert m.mul(1, 2) == 0

    def test_meet_monoid_needs_distributive_lattice(self):
        m3 = lattice_from_pairs(5, [(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)])
        with pytest.raises(PreconditionError, match="distributive"):
            meet_monoid(m3)
