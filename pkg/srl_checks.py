"""
srl-core verification suites: both equational bases, the arrow arithmetic laws,
weak residuation, multi-box product laws, antitone power sequences, the Q
round trip and the Q-reduct.

All checks are exhaustive over the carrier and return a Report.
"""

from itertools import product
from typing import Callable, Dict, Iterable, Optional, Sequence, Tuple

from errors import AlgebraError
from identities import COROLLARY_BASIS, THM1_BASIS, check_identity
from lmonoid import verify_lmonoid
from reports import Report, witness_from
from srl_monoid import SrlMonoid, classify, max_characterization_violation, residuate_from_Q


def _first(s: SrlMonoid, arity: int, predicate: Callable[..., bool]) -> Optional[Tuple[int, ...]]:
    for values in product(s.elements, repeat=arity):
        if not predicate(*values):
            return values
    return None


def _scan(report: Report, s: SrlMonoid, check: str, labels: str, predicate: Callable[..., bool], detail: str = "") -> bool:
    """Add one exhaustive check to the report; True iff it held everywhere."""
    values = _first(s, len(labels), predicate)
    if values is None:
        report.add(check, True, detail=detail)
        return True
    report.add(check, False, witness_from(s.names, labels, values), detail)
    return False


def _basis_report(s: SrlMonoid, basis, title: str) -> Report:
    report = Report(title=title, algebra=s.name)
    failures = verify_lmonoid(s.monoid).failures
    first = failures[0] if failures else None
    report.add("l-monoid", first is None, first.witness if first else None, first.check if first else "")
    report.results.extend(check_identity(s, identity) for identity in basis)
    return report


def verify_basis_thm1(s: SrlMonoid) -> Report:
    """Commutative l-monoid laws plus the six identities, each with its first witness."""
    return _basis_report(s, THM1_BASIS, "thm1-basis")


def verify_basis_corollary(s: SrlMonoid) -> Report:
    """Commutative l-monoid laws plus the eight-identity basis."""
    return _basis_report(s, COROLLARY_BASIS, "corollary-basis")


def definition_check(s: SrlMonoid) -> Report:
    """Every arrow entry is max{q in Q : a*q <= b} for the derived Q."""
    report = Report(title="definition", algebra=s.name)
    pair = max_characterization_violation(s)
    report.add("arrow-is-max", pair is None, witness_from(s.names, "ab", pair) if pair else None, "a->b = max{q in Q : a*q <= b}")
    return report


def lemma_l1_suite(s: SrlMonoid) -> Report:
    report = Report(title="arrow-laws", algebra=s.name)
    e, imp, mul, meet, join, le = s.e, s.imp, s.mul, s.meet, s.join, s.le
    _scan(report, s, "1", "abc", lambda a, b, c: imp(join(a, b), c) == meet(imp(a, c), imp(b, c)), "(avb)->c = (a->c)^(b->c)")
    _scan(report, s, "2", "abc", lambda a, b, c: le(mul(imp(a, b), imp(b, c)), imp(a, c)), "(a->b)*(b->c) <= a->c")
    _scan(report, s, "3", "a", lambda a: le(e, imp(a, a)), "e <= a->a")
    _scan(report, s, "4", "ab", lambda a, b: le(a, b) == le(e, imp(a, b)), "a <= b iff e <= a->b")
    _scan(report, s, "5", "a", lambda a: le(imp(e, a), a), "e->a <= a")
    _scan(report, s, "6", "ab", lambda a, b: imp(e, imp(a, b)) == imp(a, b), "e->(a->b) = a->b")
    _scan(report, s, "7", "ab", lambda a, b: le(imp(e, a), imp(b, mul(a, b))), "e->a <= b->(a*b)")
    return report


def _converse_counterexample(s: SrlMonoid) -> Optional[Tuple[int, int, int]]:
    for a, b, c in product(s.elements, repeat=3):
        if s.le(s.mul(a, b), c) and not s.le(a, s.imp(b, c)):
            return a, b, c
    return None


def weak_residuation_suite(s: SrlMonoid) -> Report:
    """
    a <= b->c implies a*b <= c; a*b <= c implies box(a) <= b->c.
    The converse of the first holds on every triple exactly when the algebra is a CRL.
    """
    report = Report(title="weak-residuation", algebra=s.name)
    le, mul, imp = s.le, s.mul, s.imp
    _scan(report, s, "1", "abc", lambda a, b, c: not le(a, imp(b, c)) or le(mul(a, b), c), "a <= b->c => a*b <= c")
    _scan(report, s, "2", "abc", lambda a, b, c: not le(mul(a, b), c) or le(s.box(a), imp(b, c)), "a*b <= c => box(a) <= b->c")

    counter = _converse_counterexample(s)
    crl = classify(s).crl
    detail = f"converse holds={counter is None} crl={crl}"
    if counter is not None:
        detail += f" counterexample=({', '.join(s.names[v] for v in counter)})"
    report.add("converse-iff-crl", (counter is None) == crl, detail=detail)
    return report


def residuation_equivalence_check(s: SrlMonoid) -> Report:
    """On a monotone monoid: x*(x->y) <= y everywhere iff (a <= b->c => b*a <= c) everywhere."""
    report = Report(title="residuation-equivalence", algebra=s.name)
    left = _first(s, 2, lambda x, y: s.le(s.mul(x, s.imp(x, y)), y)) is None
    right = _first(s, 3, lambda a, b, c: not s.le(a, s.imp(b, c)) or s.le(s.mul(b, a), c)) is None
    report.add("equivalence", left == right, detail=f"x*(x->y)<=y: {left}, a<=b->c=>b*a<=c: {right}")
    return report


def _box_products(s: SrlMonoid, k: int) -> Dict[int, Tuple[int, ...]]:
    """Every value box(a1)*...*box(ak) mapped to a first tuple realizing it."""
    layer: Dict[int, Tuple[int, ...]] = {s.e: ()}
    for _ in range(k):
        nxt: Dict[int, Tuple[int, ...]] = {}
        for value, tup in sorted(layer.items()):
            for a in s.elements:
                v = s.mul(value, s.box(a))
                nxt.setdefault(v, tup + (a,))
        layer = nxt
    return layer


def sg0_suite(s: SrlMonoid, k: int = 3) -> Report:
    """For tuples up to length k: box(P) = P and P <= a->(a*P), where P is a product of boxes."""
    report = Report(title="box-products", algebra=s.name)
    for length in range(1, k + 1):
        labels = [f"a{i + 1}" for i in range(length)]
        products = _box_products(s, length)
        fixed = next((tup for v, tup in sorted(products.items()) if s.box(v) != v), None)
        report.add(
            f"fixed/{length}",
            fixed is None,
            witness_from(s.names, labels, fixed) if fixed is not None else None,
            "box(P) = P",
        )
        bad = None
        for v, tup in sorted(products.items()):
            a = next((x for x in s.elements if not s.le(v, s.imp(x, s.mul(x, v)))), None)
            if a is not None:
                bad = tup + (a,)
                break
        report.add(
            f"bound/{length}",
            bad is None,
            witness_from(s.names, labels + ["a"], bad) if bad is not None else None,
            "P <= a->(a*P)",
        )
    return report


def negative_elements(s: SrlMonoid) -> Iterable[int]:
    return [a for a in s.elements if s.is_negative(a)]


def remon_suite(s: SrlMonoid) -> Report:
    """
    For a <= e the sequences a^m and box^n(a^m) are antitone in n and in m
    (checked step by step up to 2n), and constant from index n on.
    """
    report = Report(title="antitone-powers", algebra=s.name)
    bound = 2 * s.n
    pow_bad = box_bad = stable_bad = None
    for a in negative_elements(s):
        for m in range(bound):
            if pow_bad is None and not s.le(s.pow(a, m + 1), s.pow(a, m)):
                pow_bad = (a, m)
            for n in range(bound):
                here = s.box_pow(n, s.pow(a, m))
                if box_bad is None and not (
                    s.le(s.box_pow(n + 1, s.pow(a, m)), here) and s.le(s.box_pow(n, s.pow(a, m + 1)), here)
                ):
                    box_bad = (a, m, n)
        if stable_bad is None and (
            s.pow(a, s.n) != s.pow(a, bound) or s.box_pow(s.n, s.pow(a, s.n)) != s.box_pow(bound, s.pow(a, bound))
        ):
            stable_bad = (a,)

    def _w(values, labels):
        if values is None:
            return None
        return {labels[0]: s.names[values[0]], **{lab: str(v) for lab, v in zip(labels[1:], values[1:])}}

    report.add("powers", pow_bad is None, _w(pow_bad, ("a", "m")), "a^(m+1) <= a^m")
    report.add("box-powers", box_bad is None, _w(box_bad, ("a", "m", "n")), "box^n(a^m) antitone in n and m")
    report.add("stabilization", stable_bad is None, _w(stable_bad, ("a",)), f"constant from index {s.n}")
    return report


def round_trip_check(s: SrlMonoid) -> Report:
    """Extract Q = {a : box(a) = a}, re-residuate, compare arrow tables."""
    report = Report(title="round-trip", algebra=s.name)
    try:
        again = residuate_from_Q(s.monoid, s.q_set)
    except AlgebraError as exc:
        report.add("re-residuate", False, detail=str(exc))
        return report
    diff = next(((a, b) for a, b in product(s.elements, repeat=2) if again.imp(a, b) != s.imp(a, b)), None)
    report.add("arrow-identical", diff is None, witness_from(s.names, "ab", diff) if diff else None)
    return report


def q_reduct_is_crl(s: SrlMonoid) -> Report:
    """Q with the restricted operations is a commutative residuated lattice."""
    report = Report(title="q-reduct", algebra=s.name)
    q = sorted(s.q_set)
    closed = next(
        ((a, b) for a in q for b in q if not {s.meet(a, b), s.join(a, b), s.mul(a, b), s.imp(a, b)} <= s.q_set),
        None,
    )
    report.add("closed", closed is None, witness_from(s.names, "ab", closed) if closed else None, "Q closed under ^ v * ->")
    bad = next(
        (
            (a, b, c)
            for a in q
            for b in q
            for c in q
            if s.le(s.mul(a, b), c) != s.le(a, s.imp(b, c))
        ),
        None,
    )
    report.add("residuated", bad is None, witness_from(s.names, "abc", bad) if bad else None, "a*b <= c iff a <= b->c on Q")
    return report


def basis_verdicts_agree(s: SrlMonoid) -> bool:
    return verify_basis_thm1(s).passed == verify_basis_corollary(s).passed


SRL_CORE_SUITES: Sequence[Callable[[SrlMonoid], Report]] = (
    verify_basis_thm1,
    verify_basis_corollary,
    lemma_l1_suite,
    weak_residuation_suite,
    residuation_equivalence_check,
    sg0_suite,
    remon_suite,
    round_trip_check,
    q_reduct_is_crl,
)
