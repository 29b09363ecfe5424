"""
Congruences and strongly convex subalgebras.

Con(A) is the join-closure of the principal congruences (plus the identity).
SCS(A) is found by subset enumeration over masks containing e, with the
order-convex hull as the first filter.

Maps between them:
- theta_H(H): (a, b) related iff a*h <= b and b*h <= a for some h in H
- class_of_e(theta): the block of e

Theory-guaranteed facts are re-verified when verify is on (config.VERIFY_THEORY,
the CLI --fast flag turns it off) and raise InternalInvariantViolation.
"""

import logging
from dataclasses import dataclass
from itertools import product
from typing import Callable, Dict, FrozenSet, Iterable, List, Optional, Sequence, Set, Tuple, Union

from config import CONGRUENCE_MAX, SCS_MAX, VERIFY_THEORY
from errors import InternalInvariantViolation, PreconditionError, SizeBound
from lattice import bits, from_mask, to_mask
from reports import Report
from srl_monoid import SrlMonoid, classify, s_term

log = logging.getLogger(__name__)


# ─── Congruence type ──────────────────────────────────────────────────────


def _canonical_labels(labels: Sequence[int]) -> Tuple[int, ...]:
    """Relabel blocks in order of first occurrence."""
    seen: Dict[int, int] = {}
    return tuple(seen.setdefault(x, len(seen)) for x in labels)


@dataclass(frozen=True)
class Congruence:
    """A partition of the carrier as block labels; labels are canonical so equality is structural."""

    labels: Tuple[int, ...]

    @classmethod
    def from_labels(cls, labels: Sequence[int]) -> "Congruence":
        return cls(_canonical_labels(labels))

    @classmethod
    def from_blocks(cls, n: int, blocks: Iterable[Iterable[int]]) -> "Congruence":
        labels = list(range(n))
        for i, block in enumerate(blocks):
            for a in block:
                labels[a] = n + i
        return cls.from_labels(labels)

    @classmethod
    def identity(cls, n: int) -> "Congruence":
        return cls(tuple(range(n)))

    @classmethod
    def full(cls, n: int) -> "Congruence":
        return cls(tuple(0 for _ in range(n)))

    @property
    def n(self) -> int:
        return len(self.labels)

    @property
    def block_count(self) -> int:
        return max(self.labels) + 1 if self.labels else 0

    def relates(self, a: int, b: int) -> bool:
        return self.labels[a] == self.labels[b]

    def block_mask(self, a: int) -> int:
        label = self.labels[a]
        return to_mask(x for x, lab in enumerate(self.labels) if lab == label)

    def classes(self) -> List[FrozenSet[int]]:
        out: Dict[int, Set[int]] = {}
        for a, label in enumerate(self.labels):
            out.setdefault(label, set()).add(a)
        return [frozenset(out[k]) for k in sorted(out)]

    def pair_count(self) -> int:
        return sum(len(c) ** 2 for c in self.classes())

    def __le__(self, other: "Congruence") -> bool:
        """Refinement: every pair related here is related in other."""
        rep: Dict[int, int] = {}
        for a, label in enumerate(self.labels):
            if rep.setdefault(label, other.labels[a]) != other.labels[a]:
                return False
        return True

    def __lt__(self, other: "Congruence") -> bool:
        return self != other and self <= other

    def __and__(self, other: "Congruence") -> "Congruence":
        return Congruence.from_labels([self.labels[a] * (other.n + 1) + other.labels[a] for a in range(self.n)])

    def __or__(self, other: "Congruence") -> "Congruence":
        uf = _UnionFind(self.n)
        for labels in (self.labels, other.labels):
            first: Dict[int, int] = {}
            for a, label in enumerate(labels):
                uf.union(first.setdefault(label, a), a)
        return uf.congruence()

    def format(self, names: Sequence[str]) -> str:
        return " ".join(format_set(names, c) for c in self.classes())


def format_set(names: Sequence[str], members: Iterable[int]) -> str:
    return "{" + ",".join(names[a] for a in sorted(members)) + "}"


class _UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, a: int) -> int:
        while self.parent[a] != a:
            self.parent[a] = self.parent[self.parent[a]]
            a = self.parent[a]
        return a

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if rb < ra:
            ra, rb = rb, ra
        self.parent[rb] = ra
        return True

    def congruence(self) -> Congruence:
        return Congruence.from_labels([self.find(a) for a in range(len(self.parent))])


# ─── Compatibility and principal congruences ──────────────────────────────


def _operations(s: SrlMonoid) -> List[Tuple[str, Callable[[int, int], int], bool]]:
    """(name, op, commutative)"""
    return [("meet", s.meet, True), ("join", s.join, True), ("mul", s.mul, True), ("imp", s.imp, False)]


def compatibility_violation(s: SrlMonoid, t: Congruence) -> Optional[Tuple[str, int, int, int]]:
    """First (op, a, b, c) with a ~ b but op(a, c) !~ op(b, c) (or op(c, a) !~ op(c, b)), else None."""
    for name, op, commutative in _operations(s):
        for a, b in product(s.elements, repeat=2):
            if a >= b or not t.relates(a, b):
                continue
            for c in s.elements:
                if not t.relates(op(a, c), op(b, c)):
                    return name, a, b, c
                if not commutative and not t.relates(op(c, a), op(c, b)):
                    return name, a, b, c
    return None


def is_congruence(s: SrlMonoid, t: Congruence) -> bool:
    """Partition compatible with meet, join, product and arrow (equivalence is automatic)."""
    return t.n == s.n and compatibility_violation(s, t) is None


def congruence_generated_by(s: SrlMonoid, pairs: Iterable[Tuple[int, int]]) -> Congruence:
    """
    Least congruence containing the pairs: seed, then close under unary translations of
    every operation until fixpoint. Checking each element against its block root suffices.
    """
    uf = _UnionFind(s.n)
    for a, b in pairs:
        uf.union(a, b)
    ops = _operations(s)
    changed = True
    while changed:
        changed = False
        for x in s.elements:
            r = uf.find(x)
            if r == x:
                continue
            for _, op, commutative in ops:
                for c in s.elements:
                    changed |= uf.union(op(x, c), op(r, c))
                    if not commutative:
                        changed |= uf.union(op(c, x), op(c, r))
    return uf.congruence()


def principal_congruence_bruteforce(s: SrlMonoid, a: int, b: int) -> Congruence:
    return congruence_generated_by(s, [(a, b)])


def all_congruences(s: SrlMonoid) -> List[Congruence]:
    """Con(A): identity plus the join-closure of all principal congruences, sorted by size then labels."""
    if s.n > CONGRUENCE_MAX:
        raise SizeBound("congruence lattice", s.n, CONGRUENCE_MAX)
    found: Set[Congruence] = {Congruence.identity(s.n)}
    principals = {principal_congruence_bruteforce(s, a, b) for a in s.elements for b in s.elements if a < b}
    found |= principals
    frontier = list(principals)
    while frontier:
        nxt = []
        for t in frontier:
            for p in principals:
                joined = t | p
                if joined not in found:
                    found.add(joined)
                    nxt.append(joined)
        frontier = nxt
    log.debug(f"congruences algebra={s.name} count={len(found)}")
    return sorted(found, key=lambda t: (t.pair_count(), t.labels))


# ─── Subalgebra sets ──────────────────────────────────────────────────────


@dataclass(frozen=True)
class SubalgebraSet:
    """A carrier subset as a bitmask with its closure/convexity flags. Filter flags are None unless integral."""

    mask: int
    is_subalgebra: bool
    is_convex: bool
    is_strongly_convex: bool
    is_filter: Optional[bool] = None
    is_box_filter: Optional[bool] = None

    @property
    def members(self) -> FrozenSet[int]:
        return from_mask(self.mask)

    def __contains__(self, a: int) -> bool:
        return bool(self.mask >> a & 1)

    def __len__(self) -> int:
        return bin(self.mask).count("1")

    def format(self, names: Sequence[str]) -> str:
        return format_set(names, bits(self.mask))

    def flags(self) -> Dict[str, Optional[bool]]:
        return {
            "is_subalgebra": self.is_subalgebra,
            "is_convex": self.is_convex,
            "is_strongly_convex": self.is_strongly_convex,
            "is_filter": self.is_filter,
            "is_box_filter": self.is_box_filter,
        }


def _upset_mask(s: SrlMonoid, mask: int) -> int:
    up = 0
    for a in bits(mask):
        up |= s.lattice.up[a]
    return up


def _downset_mask(s: SrlMonoid, mask: int) -> int:
    down = 0
    for a in bits(mask):
        down |= s.lattice.down[a]
    return down


def is_order_convex(s: SrlMonoid, mask: int) -> bool:
    """mask equals its interval hull."""
    return _upset_mask(s, mask) & _downset_mask(s, mask) == mask


def _closed_under(mask: int, members: Sequence[int], op: Callable[[int, int], int]) -> bool:
    return all(mask >> op(a, b) & 1 for a in members for b in members)


def is_subalgebra(s: SrlMonoid, mask: int) -> bool:
    if not mask >> s.e & 1:
        return False
    members = list(bits(mask))
    return all(_closed_under(mask, members, op) for _, op, _ in _operations(s))


def strong_convexity_witness(s: SrlMonoid, mask: int) -> Optional[Tuple[int, int]]:
    """First (a, h) with h in H, a*h <= e <= h->a and a outside H, or None."""
    for h in bits(mask):
        for a in s.elements:
            if not mask >> a & 1 and s.le(s.mul(a, h), s.e) and s.le(s.e, s.imp(h, a)):
                return a, h
    return None


def is_filter(s: SrlMonoid, mask: int) -> bool:
    """Contains the top, is an upset and is closed under the product (integral case)."""
    lat = s.lattice
    if not mask >> lat.top & 1 or _upset_mask(s, mask) != mask:
        return False
    return _closed_under(mask, list(bits(mask)), s.mul)


def is_box_closed(s: SrlMonoid, mask: int) -> bool:
    return all(mask >> s.box(a) & 1 for a in bits(mask))


def is_open_lattice_filter(s: SrlMonoid, mask: int) -> bool:
    lat = s.lattice
    if not mask >> lat.top & 1 or _upset_mask(s, mask) != mask:
        return False
    return _closed_under(mask, list(bits(mask)), s.meet) and is_box_closed(s, mask)


def describe_subset(s: SrlMonoid, members: Union[Iterable[int], int]) -> SubalgebraSet:
    mask = members if isinstance(members, int) else to_mask(members)
    sub = is_subalgebra(s, mask)
    convex = sub and is_order_convex(s, mask)
    strong = convex and strong_convexity_witness(s, mask) is None
    fil = box_fil = None
    if classify(s).integral:
        fil = is_filter(s, mask)
        box_fil = fil and is_box_closed(s, mask)
    return SubalgebraSet(mask, sub, convex, strong, fil, box_fil)


def _masks_with_e(s: SrlMonoid) -> Iterable[int]:
    e_bit = 1 << s.e
    for mask in range(1 << s.n):
        if mask & e_bit:
            yield mask


def _sorted(sets: Iterable[SubalgebraSet]) -> List[SubalgebraSet]:
    return sorted(sets, key=lambda h: (len(h), h.mask))


def all_convex_subalgebras(s: SrlMonoid) -> List[SubalgebraSet]:
    if s.n > SCS_MAX:
        raise SizeBound("convex subalgebras", s.n, SCS_MAX)
    out = []
    for mask in _masks_with_e(s):
        if is_order_convex(s, mask) and is_subalgebra(s, mask):
            out.append(describe_subset(s, mask))
    return _sorted(out)


def all_strongly_convex(s: SrlMonoid) -> List[SubalgebraSet]:
    """SCS(A): masks containing e, interval hull first, then closure, then strong convexity."""
    return [h for h in all_convex_subalgebras(s) if h.is_strongly_convex]


def filters(s: SrlMonoid) -> List[SubalgebraSet]:
    if not classify(s).integral:
        raise PreconditionError("filters are defined for integral algebras only")
    if s.n > SCS_MAX:
        raise SizeBound("filters", s.n, SCS_MAX)
    return _sorted(describe_subset(s, m) for m in range(1 << s.n) if is_filter(s, m))


def box_filters(s: SrlMonoid) -> List[SubalgebraSet]:
    return [h for h in filters(s) if h.is_box_filter]


def open_lattice_filters(s: SrlMonoid) -> List[SubalgebraSet]:
    """Lattice filters closed under box (meaningful for subresiduated lattices)."""
    if s.n > SCS_MAX:
        raise SizeBound("open lattice filters", s.n, SCS_MAX)
    return _sorted(describe_subset(s, m) for m in range(1 << s.n) if is_open_lattice_filter(s, m))


# ─── The two maps ─────────────────────────────────────────────────────────


def _as_mask(h: Union["SubalgebraSet", Iterable[int], int]) -> int:
    if isinstance(h, SubalgebraSet):
        return h.mask
    if isinstance(h, int):
        return h
    return to_mask(h)


def theta_relation(s: SrlMonoid, mask: int) -> List[List[bool]]:
    members = list(bits(mask))
    return [
        [any(s.le(s.mul(a, h), b) and s.le(s.mul(b, h), a) for h in members) for b in s.elements]
        for a in s.elements
    ]


def theta_H(s: SrlMonoid, h: Union["SubalgebraSet", Iterable[int], int], verify: Optional[bool] = None) -> Congruence:
    """
    The relation {(a, b) : a*h <= b and b*h <= a for some h in H} as a partition.
    H must be convex. The result is re-checked to be an equivalence (always) and a
    congruence (when verifying).
    """
    verify = VERIFY_THEORY if verify is None else verify
    mask = _as_mask(h)
    if not (is_subalgebra(s, mask) and is_order_convex(s, mask)):
        raise PreconditionError(f"theta_H needs a convex subalgebra, got {format_set(s.names, bits(mask))}")
    rel = theta_relation(s, mask)
    labels = []
    for a in s.elements:
        labels.append(next(b for b in s.elements if rel[a][b]) if any(rel[a]) else a)
    t = Congruence.from_labels(labels)
    mismatch = next(((a, b) for a, b in product(s.elements, repeat=2) if rel[a][b] != t.relates(a, b)), None)
    if mismatch is not None:
        raise InternalInvariantViolation("theta_H is not an equivalence", mismatch)
    if verify:
        bad = compatibility_violation(s, t)
        if bad is not None:
            raise InternalInvariantViolation("theta_H is not a congruence", bad)
    return t


def class_of_e(s: SrlMonoid, t: Congruence, verify: Optional[bool] = None) -> SubalgebraSet:
    """e/theta, flagged. It is always strongly convex; verified when verifying."""
    verify = VERIFY_THEORY if verify is None else verify
    h = describe_subset(s, t.block_mask(s.e))
    if verify and not h.is_strongly_convex:
        raise InternalInvariantViolation("e-block is not strongly convex", t.format(s.names))
    return h


# ─── Suites ───────────────────────────────────────────────────────────────


def lemma_c3_c4_suite(s: SrlMonoid, congruences: Optional[List[Congruence]] = None) -> Report:
    """
    (a, b) in theta iff s(a, b) in e/theta, for every congruence; and for every convex H
    the four membership conditions for theta_H agree on every pair.
    """
    report = Report(title="s-term-membership", algebra=s.name)
    congruences = all_congruences(s) if congruences is None else congruences
    bad = None
    for t in congruences:
        e_block = t.block_mask(s.e)
        for a, b in product(s.elements, repeat=2):
            if t.relates(a, b) != bool(e_block >> s_term(s, a, b) & 1):
                bad = (t, a, b)
                break
        if bad:
            break
    report.add(
        "pair-iff-s-term",
        bad is None,
        {"theta": bad[0].format(s.names), "a": s.names[bad[1]], "b": s.names[bad[2]]} if bad else None,
        "(a,b) in theta iff s(a,b) in e/theta",
    )

    bad4 = None
    for h in all_convex_subalgebras(s):
        members = list(bits(h.mask))
        rel = theta_relation(s, h.mask)
        for a, b in product(s.elements, repeat=2):
            cond_a = rel[a][b]
            cond_b = s.meet(s.imp(a, b), s.e) in h and s.meet(s.imp(b, a), s.e) in h
            cond_c = s_term(s, a, b) in h
            cond_d = any(s.le(x, s.imp(a, b)) and s.le(x, s.imp(b, a)) for x in members)
            if not cond_a == cond_b == cond_c == cond_d:
                bad4 = (h, a, b)
                break
        if bad4:
            break
    report.add(
        "four-conditions",
        bad4 is None,
        {"H": bad4[0].format(s.names), "a": s.names[bad4[1]], "b": s.names[bad4[2]]} if bad4 else None,
        "theta_H membership, arrow-meets, s-term, common lower bound agree",
    )
    return report


def verify_order_iso(
    s: SrlMonoid,
    congruences: Optional[List[Congruence]] = None,
    scs: Optional[List[SubalgebraSet]] = None,
) -> Report:
    """theta -> e/theta and H -> theta_H are mutually inverse order isomorphisms."""
    report = Report(title="con-scs-iso", algebra=s.name)
    congruences = all_congruences(s) if congruences is None else congruences
    scs = all_strongly_convex(s) if scs is None else scs
    scs_masks = {h.mask for h in scs}
    con_set = set(congruences)

    report.add("sizes", len(congruences) == len(scs), detail=f"|Con|={len(congruences)} |SCS|={len(scs)}")

    forward = {t: t.block_mask(s.e) for t in congruences}
    off = next((t for t, m in forward.items() if m not in scs_masks), None)
    report.add("e-block-in-scs", off is None, {"theta": off.format(s.names)} if off else None)

    backward = {h.mask: theta_H(s, h, verify=False) for h in scs}
    off_h = next((m for m, t in backward.items() if t not in con_set or not is_congruence(s, t)), None)
    report.add("theta-H-in-con", off_h is None, {"H": format_set(s.names, bits(off_h))} if off_h is not None else None)

    bad_gf = next((t for t in congruences if backward.get(forward[t]) != t), None)
    report.add("theta-of-e-block", bad_gf is None, {"theta": bad_gf.format(s.names)} if bad_gf else None, "theta_(e/theta) = theta")

    bad_fg = next((m for m, t in backward.items() if t.block_mask(s.e) != m), None)
    report.add(
        "e-block-of-theta-H",
        bad_fg is None,
        {"H": format_set(s.names, bits(bad_fg))} if bad_fg is not None else None,
        "e/theta_H = H",
    )

    bad_order = next(
        ((t, u) for t in congruences for u in congruences if (t <= u) != (forward[t] & ~forward[u] == 0)),
        None,
    )
    report.add(
        "order-congruences",
        bad_order is None,
        {"theta": bad_order[0].format(s.names), "psi": bad_order[1].format(s.names)} if bad_order else None,
        "theta <= psi iff e/theta <= e/psi",
    )

    bad_h = next(
        (
            (h1, h2)
            for h1 in scs_masks
            for h2 in scs_masks
            if (h1 & ~h2 == 0) != (backward[h1] <= backward[h2])
        ),
        None,
    )
    report.add(
        "order-subalgebras",
        bad_h is None,
        {"H1": format_set(s.names, bits(bad_h[0])), "H2": format_set(s.names, bits(bad_h[1]))} if bad_h else None,
        "H1 <= H2 iff theta_H1 <= theta_H2",
    )

    if classify(s).crl:
        su = {h.mask for h in all_convex_subalgebras(s)}
        report.add("crl-scs-equals-su", su == scs_masks, detail=f"|SU|={len(su)} |SCS|={len(scs_masks)}")
    return report


def _lattice_distributive(elements: Sequence[Congruence]) -> Optional[Tuple[Congruence, Congruence, Congruence]]:
    for x, y, z in product(elements, repeat=3):
        if x & (y | z) != (x & y) | (x & z):
            return x, y, z
    return None


def scs_characterization_suite(s: SrlMonoid, congruences: Optional[List[Congruence]] = None) -> Report:
    """
    Case-specific descriptions of SCS(A): integral (convex = strongly convex = box-filter over
    every subset), CRL (SCS = SU), sr-lattice (SCS = open lattice filters), integral CRL
    (filters = box-filters); plus distributivity of Con(A).
    """
    report = Report(title="scs-characterizations", algebra=s.name)
    flags = classify(s)
    scs = {h.mask for h in all_strongly_convex(s)}

    if flags.integral:
        bad = None
        for mask in range(1 << s.n):
            h = describe_subset(s, mask)
            if not h.is_convex == h.is_strongly_convex == h.is_box_filter:
                bad = mask
                break
        report.add(
            "integral-collapse",
            bad is None,
            {"H": format_set(s.names, bits(bad))} if bad is not None else None,
            "convex = strongly convex = box-filter",
        )
        if flags.crl:
            fil = {h.mask for h in filters(s)}
            box_fil = {h.mask for h in box_filters(s)}
            report.add("crl-filters-are-box-filters", fil == box_fil, detail=f"|Fil|={len(fil)} |boxFil|={len(box_fil)}")

    if flags.crl:
        su = {h.mask for h in all_convex_subalgebras(s)}
        report.add("crl-scs-equals-su", su == scs, detail=f"|SU|={len(su)} |SCS|={len(scs)}")

    if flags.sr_lattice:
        olf = {h.mask for h in open_lattice_filters(s)}
        report.add("sr-lattice-scs-equals-open-filters", olf == scs, detail=f"|OLF|={len(olf)} |SCS|={len(scs)}")

    congruences = all_congruences(s) if congruences is None else congruences
    triple = _lattice_distributive(congruences)
    report.add(
        "con-distributive",
        triple is None,
        {k: t.format(s.names) for k, t in zip("xyz", triple)} if triple else None,
    )
    return report
