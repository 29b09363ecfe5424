"""
Commutative l-monoids: a finite lattice plus a unital, commutative, associative
product distributing over joins. Monotonicity is derived from join-distribution
and checked as well.
"""

from dataclasses import dataclass
from itertools import product
from typing import Optional, Sequence, Tuple

from errors import NotAnLMonoid, PreconditionError
from lattice import FiniteLattice, Table, is_distributive
from reports import Report, witness_from


@dataclass(frozen=True)
class CommutativeLMonoid:
    lattice: FiniteLattice
    prod: Table
    unit: int

    @property
    def n(self) -> int:
        return self.lattice.n

    @property
    def elements(self) -> range:
        return self.lattice.elements

    @property
    def names(self) -> Tuple[str, ...]:
        return self.lattice.names

    def mul(self, a: int, b: int) -> int:
        return self.prod[a][b]

    def le(self, a: int, b: int) -> bool:
        return self.lattice.leq[a][b]

    def meet(self, a: int, b: int) -> int:
        return self.lattice.meet_table[a][b]

    def join(self, a: int, b: int) -> int:
        return self.lattice.join_table[a][b]

    @classmethod
    def unchecked(cls, lattice: FiniteLattice, prod: Sequence[Sequence[int]], unit: int) -> "CommutativeLMonoid":
        """Shape and index checks only; the laws are left to verify_lmonoid."""
        if not 0 <= unit < lattice.n:
            raise PreconditionError(f"unit {unit} is not an element index")
        return cls(lattice=lattice, prod=_as_table(lattice.n, prod, "prod"), unit=unit)


def _as_table(n: int, rows: Sequence[Sequence[int]], what: str) -> Table:
    if len(rows) != n or any(len(row) != n for row in rows):
        raise PreconditionError(f"{what} table must be {n}x{n}")
    table = tuple(tuple(int(v) for v in row) for row in rows)
    for a, row in enumerate(table):
        for b, v in enumerate(row):
            if not 0 <= v < n:
                raise PreconditionError(f"{what}[{a}][{b}] = {v} is not an element index")
    return table


def _first_violation(m: CommutativeLMonoid) -> Optional[Tuple[str, Tuple[int, ...]]]:
    for law, witness in _law_scan(m):
        if witness is not None:
            return law, witness
    return None


def _law_scan(m: CommutativeLMonoid):
    """Yield (law, first witness or None) for each l-monoid law in a fixed order."""
    els = m.elements
    mul, join, le, e = m.mul, m.join, m.le, m.unit

    yield "commutativity", next(((a, b) for a, b in product(els, repeat=2) if mul(a, b) != mul(b, a)), None)
    yield "unit", next(((a,) for a in els if mul(e, a) != a or mul(a, e) != a), None)
    yield "associativity", next(
        ((a, b, c) for a, b, c in product(els, repeat=3) if mul(mul(a, b), c) != mul(a, mul(b, c))),
        None,
    )
    yield "join-distribution", next(
        ((a, b, c) for a, b, c in product(els, repeat=3) if mul(join(a, b), c) != join(mul(a, c), mul(b, c))),
        None,
    )
    yield "monotonicity", next(
        ((a, b, c) for a, b, c in product(els, repeat=3) if le(a, b) and not le(mul(a, c), mul(b, c))),
        None,
    )


_LAW_LABELS = {1: ("a",), 2: ("a", "b"), 3: ("a", "b", "c")}


def verify_lmonoid(m: CommutativeLMonoid, name: str = "") -> Report:
    """Exhaustive law check. Each law reports its first witnessing tuple."""
    report = Report(title="l-monoid", algebra=name)
    for law, witness in _law_scan(m):
        if witness is None:
            report.add(law, True)
        else:
            report.add(law, False, witness_from(m.names, _LAW_LABELS[len(witness)], witness))
    return report


def build_lmonoid(lattice: FiniteLattice, prod: Sequence[Sequence[int]], unit: int) -> CommutativeLMonoid:
    """Validate shape, then every law. Raises NotAnLMonoid with the first violated law."""
    m = CommutativeLMonoid.unchecked(lattice, prod, unit)
    violation = _first_violation(m)
    if violation is not None:
        raise NotAnLMonoid(*violation)
    return m


def meet_monoid(lattice: FiniteLattice) -> CommutativeLMonoid:
    """The l-monoid with product = meet and unit = top. Meet distributes over joins only on a distributive lattice."""
    if not is_distributive(lattice):
        raise PreconditionError("product = meet needs a distributive lattice")
    return build_lmonoid(lattice, lattice.meet_table, lattice.top)
