"""
srl-monoids — a commutative l-monoid with a Q-relative residual a->b = max{q in Q : a*q <= b}.

The arrow table is the stored primitive; Q = {a : e->a = a} is derived.
Two constructors:
- residuate_from_Q: start from the subalgebra Q, compute every residual
- srl_from_arrow: start from an arrow table, check the six-identity basis, derive Q

Power tables (a^k and box^k(a)) are filled at construction up to k = n.
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

from errors import BasisViolation, InternalInvariantViolation, NotResiduated, PreconditionError, QNotSubalgebra
from identities import THM1_BASIS
from lattice import Table, max_of_subset
from lmonoid import CommutativeLMonoid, _as_table

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class SrlMonoid:
    """
    (A, meet, join, *, ->, e). Construct through residuate_from_Q or srl_from_arrow;
    SrlMonoid.unchecked wraps arbitrary arrow tables for candidate sweeps.
    """

    monoid: CommutativeLMonoid
    arrow: Table
    name: str = field(default="", compare=False)
    q_set: FrozenSet[int] = field(init=False, compare=False, repr=False)
    box_table: Tuple[int, ...] = field(init=False, compare=False, repr=False)
    pow_table: Tuple[Tuple[int, ...], ...] = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        m = self.monoid
        box = tuple(self.arrow[m.unit][a] for a in m.elements)
        rows: List[Tuple[int, ...]] = [tuple(m.unit for _ in m.elements)]
        for _ in range(m.n):
            rows.append(tuple(m.mul(a, rows[-1][a]) for a in m.elements))
        object.__setattr__(self, "box_table", box)
        object.__setattr__(self, "q_set", frozenset(a for a in m.elements if box[a] == a))
        object.__setattr__(self, "pow_table", tuple(rows))

    @classmethod
    def unchecked(cls, monoid: CommutativeLMonoid, arrow: Sequence[Sequence[int]], name: str = "") -> "SrlMonoid":
        """Wrap an arrow table without any validation beyond its shape."""
        return cls(monoid=monoid, arrow=_as_table(monoid.n, arrow, "arrow"), name=name)

    # ─── Signature ───

    @property
    def n(self) -> int:
        return self.monoid.n

    @property
    def elements(self) -> range:
        return self.monoid.elements

    @property
    def names(self) -> Tuple[str, ...]:
        return self.monoid.names

    @property
    def lattice(self):
        return self.monoid.lattice

    @property
    def e(self) -> int:
        return self.monoid.unit

    def le(self, a: int, b: int) -> bool:
        return self.monoid.lattice.leq[a][b]

    def meet(self, a: int, b: int) -> int:
        return self.monoid.lattice.meet_table[a][b]

    def join(self, a: int, b: int) -> int:
        return self.monoid.lattice.join_table[a][b]

    def mul(self, a: int, b: int) -> int:
        return self.monoid.prod[a][b]

    def imp(self, a: int, b: int) -> int:
        return self.arrow[a][b]

    # ─── Derived operations ───

    def box(self, a: int) -> int:
        """box(a) = e -> a."""
        return self.box_table[a]

    def pow(self, a: int, k: int) -> int:
        """a^0 = e, a^(k+1) = a * a^k."""
        if k < len(self.pow_table):
            return self.pow_table[k][a]
        out = self.pow_table[-1][a]
        for _ in range(k - len(self.pow_table) + 1):
            out = self.mul(a, out)
        return out

    def box_pow(self, k: int, a: int) -> int:
        """box^0(a) = a, box^1(a) = box(a), box^(k+1)(a) = box(a) * box^k(a) for k >= 1."""
        if k == 0:
            return a
        return self.pow(self.box_table[a], k)

    def is_negative(self, a: int) -> bool:
        return self.le(a, self.e)

    @property
    def negative_mask(self) -> int:
        return self.monoid.lattice.down[self.e]

    def element_names(self, elements: Iterable[int]) -> List[str]:
        return [self.names[a] for a in sorted(elements)]


# ─── Residuation from Q ───────────────────────────────────────────────────


def subalgebra_violation(m: CommutativeLMonoid, q: FrozenSet[int]) -> Optional[Tuple[str, Tuple[int, ...]]]:
    """First closure Q fails (unit, meet, join, product) with its witness, or None."""
    if m.unit not in q:
        return "unit", (m.unit,)
    ordered = sorted(q)
    for closure, op in (("meet", m.meet), ("join", m.join), ("product", m.mul)):
        for a in ordered:
            for b in ordered:
                if op(a, b) not in q:
                    return closure, (a, b)
    return None


def residual_candidates(m: CommutativeLMonoid, q: Iterable[int], a: int, b: int) -> List[int]:
    return [x for x in sorted(q) if m.le(m.mul(a, x), b)]


def residuate_from_Q(m: CommutativeLMonoid, q: Iterable[int], name: str = "") -> SrlMonoid:
    """
    Compute a->b = max{x in Q : a*x <= b} for every pair.
    Raises QNotSubalgebra or NotResiduated (never completes a partial arrow).
    """
    q_set = frozenset(q)
    bad = [x for x in q_set if not 0 <= x < m.n]
    if bad:
        raise PreconditionError(f"Q contains non-elements {sorted(bad)}")
    violation = subalgebra_violation(m, q_set)
    if violation is not None:
        raise QNotSubalgebra(*violation)

    rows = []
    for a in m.elements:
        row = []
        for b in m.elements:
            candidates = residual_candidates(m, q_set, a, b)
            best = max_of_subset(m.lattice, candidates)
            if best is None:
                raise NotResiduated((a, b), tuple(candidates))
            row.append(best)
        rows.append(tuple(row))
    s = SrlMonoid(monoid=m, arrow=tuple(rows), name=name)
    if s.q_set != q_set:
        raise InternalInvariantViolation("derived Q differs from input Q", (sorted(s.q_set), sorted(q_set)))
    return s


# ─── From an arrow table ──────────────────────────────────────────────────


def max_characterization_violation(s: SrlMonoid) -> Optional[Tuple[int, int]]:
    """First pair whose arrow entry is not max{q in Q : a*q <= b}, or None."""
    for a in s.elements:
        for b in s.elements:
            best = max_of_subset(s.lattice, residual_candidates(s.monoid, s.q_set, a, b))
            if best != s.imp(a, b):
                return a, b
    return None


def srl_from_arrow(m: CommutativeLMonoid, arrow: Sequence[Sequence[int]], name: str = "") -> SrlMonoid:
    """
    Check the six-identity basis exhaustively, then derive Q and confirm
    the max-characterization. Raises BasisViolation.
    """
    s = SrlMonoid.unchecked(m, arrow, name)
    for identity in THM1_BASIS:
        values = identity.counterexample(s)
        if values is not None:
            log.debug(f"basis_violation identity={identity.tag} values={values}")
            raise BasisViolation(identity.tag, dict(zip(identity.variables, (s.names[v] for v in values))))
    pair = max_characterization_violation(s)
    if pair is not None:
        raise BasisViolation("max-characterization", {"a": s.names[pair[0]], "b": s.names[pair[1]]})
    return s


# ─── Terms and classification ─────────────────────────────────────────────


def s_term(s: SrlMonoid, a: int, b: int) -> int:
    """s(a, b) = (a->b) ^ (b->a) ^ e."""
    return s.meet(s.meet(s.imp(a, b), s.imp(b, a)), s.e)


@dataclass(frozen=True)
class Classification:
    integral: bool
    crl: bool
    sr_lattice: bool
    bounded: bool

    def to_dict(self) -> Dict[str, bool]:
        return {
            "integral": self.integral,
            "crl": self.crl,
            "sr_lattice": self.sr_lattice,
            "bounded": self.bounded,
        }


def classify(s: SrlMonoid) -> Classification:
    lat = s.lattice
    # finite nonempty lattices always have both bounds
    bounded = lat.n >= 1
    integral = lat.top == s.e
    crl = all(s.box(a) == a for a in s.elements)
    sr_lattice = integral and s.monoid.prod == lat.meet_table
    return Classification(integral=integral, crl=crl, sr_lattice=sr_lattice, bounded=bounded)


def q_names(s: SrlMonoid) -> List[str]:
    return [s.names[a] for a in sorted(s.q_set)]
