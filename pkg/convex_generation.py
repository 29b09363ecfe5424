"""
Generated strongly convex subalgebras and principal congruences.

For S inside the negative cone, C[S] (the least strongly convex subalgebra
containing S) is computed by formula:

    x in C[S]  iff  box^n(h) <= x and x * box^n(h) <= e  for some h in <S>, n

with n capped at the carrier size (box-power sequences of negative elements are
antitone and constant from index n on). The oracle intersects all strongly
convex subalgebras containing S. Principal congruences get the same treatment:
a formula over s(a, b) checked against brute-force closure.
"""

import logging
from dataclasses import dataclass, field
from itertools import product
from typing import Dict, FrozenSet, Iterable, List, Optional, Set, Tuple

from config import VERIFY_THEORY
from congruences import (
    Congruence,
    SubalgebraSet,
    all_congruences,
    all_strongly_convex,
    describe_subset,
    format_set,
    principal_congruence_bruteforce,
)
from errors import GeneratorNotNegative, InternalInvariantViolation
from identities import E2, satisfies
from lattice import bits, to_mask
from reports import Report
from srl_monoid import SrlMonoid, s_term

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class GeneratorWitness:
    """Certifies x in C[S]: bound = box^n(h^m) with bound <= x and x * bound <= e."""

    element: int
    h: int
    n: int
    m: int
    bound: int

    def format(self, names) -> str:
        return f"{names[self.element]} <= e via h={names[self.h]}, n={self.n}, m={self.m}"


@dataclass(frozen=True)
class GeneratedScs:
    subalgebra: SubalgebraSet
    witnesses: Dict[int, GeneratorWitness] = field(compare=False)

    @property
    def mask(self) -> int:
        return self.subalgebra.mask

    @property
    def members(self) -> FrozenSet[int]:
        return self.subalgebra.members

    def format(self, names) -> str:
        return self.subalgebra.format(names)

    def witness_lines(self, names) -> List[str]:
        return [self.witnesses[x].format(names) for x in sorted(self.witnesses)]


# ─── Negative cone and submonoids ─────────────────────────────────────────


def negative_cone(s: SrlMonoid) -> FrozenSet[int]:
    """{a : a <= e}; closed under product, meet, join and box."""
    return frozenset(bits(s.negative_mask))


def submonoid_closure(s: SrlMonoid, gen: Iterable[int]) -> FrozenSet[int]:
    """Least subset containing gen and e that is closed under the product."""
    out: Set[int] = {s.e, *gen}
    frontier = list(out)
    while frontier:
        nxt = []
        for a in frontier:
            for b in list(out):
                c = s.mul(a, b)
                if c not in out:
                    out.add(c)
                    nxt.append(c)
        frontier = nxt
    return frozenset(out)


def _require_negative(s: SrlMonoid, gen: Iterable[int]) -> List[int]:
    members = sorted(set(gen))
    for a in members:
        if not s.is_negative(a):
            raise GeneratorNotNegative(a, s.names[a])
    return members


def _collect(s: SrlMonoid, bounds: Iterable[Tuple[int, int, int, int]]) -> Dict[int, GeneratorWitness]:
    """bounds yields (h, n, m, value); the first bound admitting x becomes its witness."""
    witnesses: Dict[int, GeneratorWitness] = {}
    for h, n, m, t in bounds:
        for x in s.elements:
            if x not in witnesses and s.le(t, x) and s.le(s.mul(x, t), s.e):
                witnesses[x] = GeneratorWitness(x, h, n, m, t)
    return witnesses


def _formula_mask(s: SrlMonoid, closure: Iterable[int], bound: int) -> int:
    ordered = sorted(closure)
    return to_mask(_collect(s, ((h, n, 1, s.box_pow(n, h)) for n in range(bound + 1) for h in ordered)))


def generated_scs(s: SrlMonoid, gen: Iterable[int], verify: Optional[bool] = None) -> GeneratedScs:
    """C[S] by formula with h over <S> and n up to the carrier size, with a witness per member."""
    verify = VERIFY_THEORY if verify is None else verify
    closure = submonoid_closure(s, _require_negative(s, gen))
    ordered = sorted(closure)
    witnesses = _collect(s, ((h, n, 1, s.box_pow(n, h)) for n in range(s.n + 1) for h in ordered))
    mask = to_mask(witnesses)
    if verify:
        if _formula_mask(s, closure, 2 * s.n) != mask:
            raise InternalInvariantViolation("generated set not stable at exponent bound", s.n)
        h = describe_subset(s, mask)
        if not h.is_strongly_convex:
            raise InternalInvariantViolation("generated set is not strongly convex", format_set(s.names, bits(mask)))
    return GeneratedScs(describe_subset(s, mask), witnesses)


def generated_scs_oracle(s: SrlMonoid, gen: Iterable[int], scs: Optional[List[SubalgebraSet]] = None) -> SubalgebraSet:
    """Intersection of every strongly convex subalgebra containing gen (any generators)."""
    scs = all_strongly_convex(s) if scs is None else scs
    want = to_mask(gen)
    mask = (1 << s.n) - 1
    for h in scs:
        if want & ~h.mask == 0:
            mask &= h.mask
    return describe_subset(s, mask)


def scs_join(s: SrlMonoid, h1: SubalgebraSet, h2: SubalgebraSet, scs: Optional[List[SubalgebraSet]] = None) -> SubalgebraSet:
    """Join in the SCS lattice: the strongly convex subalgebra generated by the union."""
    return generated_scs_oracle(s, bits(h1.mask | h2.mask), scs)


def _principal_bounds(s: SrlMonoid, a: int, diagonal: bool) -> Iterable[Tuple[int, int, int, int]]:
    for n in range(s.n + 1):
        for m in ([n] if diagonal else range(s.n + 1)):
            yield a, n, m, s.box_pow(n, s.pow(a, m))


def principal_scs(s: SrlMonoid, a: int, verify: Optional[bool] = None) -> GeneratedScs:
    """
    C[a] from box^n(a^m) bounds. When verifying: the diagonal n = m gives the same set,
    and for negative x, membership reduces to box^n(a^m) <= x.
    """
    verify = VERIFY_THEORY if verify is None else verify
    _require_negative(s, [a])
    witnesses = _collect(s, _principal_bounds(s, a, diagonal=False))
    mask = to_mask(witnesses)
    if verify:
        diagonal = to_mask(_collect(s, _principal_bounds(s, a, diagonal=True)))
        if diagonal != mask:
            raise InternalInvariantViolation("diagonal exponents give a different C[a]", (mask, diagonal))
        terms = {t for _, _, _, t in _principal_bounds(s, a, diagonal=False)}
        for x in negative_cone(s):
            if any(s.le(t, x) for t in terms) != bool(mask >> x & 1):
                raise InternalInvariantViolation("negative-cone membership shortcut fails", s.names[x])
    return GeneratedScs(describe_subset(s, mask), witnesses)


# ─── Principal congruences by formula ─────────────────────────────────────


def _thmpc_terms(s: SrlMonoid, a: int, b: int, diagonal: bool) -> Set[int]:
    u = s_term(s, a, b)
    return {t for _, _, _, t in _principal_bounds(s, u, diagonal)}


def _relation_to_congruence(s: SrlMonoid, related) -> Congruence:
    labels = [next((y for y in s.elements if related(x, y)), x) for x in s.elements]
    t = Congruence.from_labels(labels)
    bad = next(((x, y) for x, y in product(s.elements, repeat=2) if related(x, y) != t.relates(x, y)), None)
    if bad is not None:
        raise InternalInvariantViolation("formula relation is not an equivalence", bad)
    return t


def principal_theta_via_thmpc(s: SrlMonoid, a: int, b: int, verify: Optional[bool] = None) -> Congruence:
    """(x, y) related iff box^m(s(a,b)^n) <= s(x, y) for some n, m up to the carrier size."""
    verify = VERIFY_THEORY if verify is None else verify
    terms = _thmpc_terms(s, a, b, diagonal=False)
    t = _relation_to_congruence(s, lambda x, y: any(s.le(v, s_term(s, x, y)) for v in terms))
    if verify:
        brute = principal_congruence_bruteforce(s, a, b)
        if brute != t:
            raise InternalInvariantViolation("formula and closure disagree on theta", (s.names[a], s.names[b]))
        diag_terms = _thmpc_terms(s, a, b, diagonal=True)
        diag = _relation_to_congruence(s, lambda x, y: any(s.le(v, s_term(s, x, y)) for v in diag_terms))
        if diag != t:
            raise InternalInvariantViolation("diagonal exponents give a different theta", (s.names[a], s.names[b]))
    return t


def lemma_pc1_check(s: SrlMonoid, a: int, b: int, verify: Optional[bool] = None) -> Report:
    """e-block of the brute-force theta(a, b) equals C[s(a, b)]."""
    report = Report(title="principal-e-block", algebra=s.name)
    block = principal_congruence_bruteforce(s, a, b).block_mask(s.e)
    generated = generated_scs(s, [s_term(s, a, b)], verify).mask
    report.add(
        f"{s.names[a]},{s.names[b]}",
        block == generated,
        None if block == generated else {"e-block": format_set(s.names, bits(block)), "C[s]": format_set(s.names, bits(generated))},
    )
    return report


def principal_suite(s: SrlMonoid, verify: Optional[bool] = None) -> Report:
    """Every pair: formula theta = closure theta (both exponent variants) and e/theta(a, b) = C[s(a, b)]."""
    report = Report(title="principal-congruences", algebra=s.name)
    theta_bad = block_bad = None
    for a, b in product(s.elements, repeat=2):
        brute = principal_congruence_bruteforce(s, a, b)
        u = s_term(s, a, b)
        for diagonal in (False, True):
            terms = _thmpc_terms(s, a, b, diagonal)
            formula = _relation_to_congruence(s, lambda x, y: any(s.le(v, s_term(s, x, y)) for v in terms))
            if theta_bad is None and formula != brute:
                theta_bad = (a, b)
        if block_bad is None and brute.block_mask(s.e) != generated_scs(s, [u], verify=verify).mask:
            block_bad = (a, b)
    report.add("formula-equals-closure", theta_bad is None, _pair(s, theta_bad))
    report.add("e-block-equals-C[s]", block_bad is None, _pair(s, block_bad))
    return report


def _pair(s: SrlMonoid, pair: Optional[Tuple[int, int]]) -> Optional[Dict[str, str]]:
    if pair is None:
        return None
    return {"a": s.names[pair[0]], "b": s.names[pair[1]]}


# ─── Lattice operations on SCS ────────────────────────────────────────────


def meet_formula_counterexample(s: SrlMonoid) -> Optional[Tuple[int, int]]:
    """First negative pair with C[a v b] != C[a] & C[b], or None."""
    neg = sorted(negative_cone(s))
    cache = {a: principal_scs(s, a, verify=False).mask for a in neg}
    for a, b in product(neg, repeat=2):
        if cache[s.join(a, b)] != cache[a] & cache[b]:
            return a, b
    return None


def scs_lattice_ops_check(s: SrlMonoid, scs: Optional[List[SubalgebraSet]] = None) -> Report:
    """
    For negative a, b: C[a ^ b] = C[a] v C[b] always; C[a v b] = C[a] & C[b] under E2,
    otherwise report whether the meet formula has a counterexample. Also checks that
    every congruence's e-block is C[meet of s-terms of its pairs].
    """
    report = Report(title="scs-lattice-ops", algebra=s.name)
    scs = all_strongly_convex(s) if scs is None else scs
    neg = sorted(negative_cone(s))
    by_mask = {h.mask: h for h in scs}
    c = {a: principal_scs(s, a, verify=False).mask for a in neg}

    join_bad = None
    for a, b in product(neg, repeat=2):
        joined = scs_join(s, by_mask[c[a]], by_mask[c[b]], scs).mask
        if c[s.meet(a, b)] != joined:
            join_bad = (a, b)
            break
    report.add("join-formula", join_bad is None, _pair(s, join_bad), "C[a^b] = C[a] v C[b]")

    counter = meet_formula_counterexample(s)
    if satisfies(s, E2):
        report.add("meet-formula", counter is None, _pair(s, counter), "E2 holds: C[avb] = C[a] & C[b]")
    else:
        detail = "E2 fails: "
        if counter is None:
            detail += "no counterexample to C[avb] = C[a] & C[b]"
        else:
            a, b = counter
            detail += (
                f"counterexample a={s.names[a]} b={s.names[b]}: "
                f"C[avb]={format_set(s.names, bits(c[s.join(a, b)]))} "
                f"C[a]&C[b]={format_set(s.names, bits(c[a] & c[b]))}"
            )
        report.add("meet-formula", True, detail=detail)

    compact_bad = None
    for t in all_congruences(s):
        u = s.e
        for x, y in product(s.elements, repeat=2):
            if x < y and t.relates(x, y):
                u = s.meet(u, s_term(s, x, y))
        if t.block_mask(s.e) != c[u]:
            compact_bad = t
            break
    report.add(
        "compact-e-blocks",
        compact_bad is None,
        {"theta": compact_bad.format(s.names)} if compact_bad else None,
        "e/theta = C[meet of s-terms]",
    )
    return report


def generation_suite(s: SrlMonoid, scs: Optional[List[SubalgebraSet]] = None) -> Report:
    """
    Over every subset S of the negative cone: formula = oracle, monotonicity of C[.],
    and single generators agree with the box^n(a^m) form.
    """
    report = Report(title="scs-generation", algebra=s.name)
    scs = all_strongly_convex(s) if scs is None else scs
    neg = sorted(negative_cone(s))
    results: Dict[int, int] = {}
    oracle_bad = None
    for k in range(1 << len(neg)):
        gen = [neg[i] for i in bits(k)]
        mask = generated_scs(s, gen, verify=False).mask
        results[to_mask(gen)] = mask
        if oracle_bad is None and mask != generated_scs_oracle(s, gen, scs).mask:
            oracle_bad = gen
    report.add(
        "formula-equals-oracle",
        oracle_bad is None,
        {"S": format_set(s.names, oracle_bad)} if oracle_bad is not None else None,
    )

    mono_bad = next(
        ((g1, g2) for g1, g2 in product(results, repeat=2) if g1 & ~g2 == 0 and results[g1] & ~results[g2] != 0),
        None,
    )
    report.add(
        "monotone",
        mono_bad is None,
        {"S": format_set(s.names, bits(mono_bad[0])), "T": format_set(s.names, bits(mono_bad[1]))} if mono_bad else None,
        "S <= T implies C[S] <= C[T]",
    )

    single_bad = next((a for a in neg if principal_scs(s, a, verify=True).mask != results[1 << a]), None)
    report.add(
        "principal-form",
        single_bad is None,
        {"a": s.names[single_bad]} if single_bad is not None else None,
        "C[a] by box^n(a^m), diagonal and negative shortcut",
    )
    return report
