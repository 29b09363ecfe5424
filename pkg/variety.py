"""
Chain-generated subvariety: the power laws behind its bases, subdirect
irreducibility and per-algebra membership checks for the three bases.

Membership is per-algebra identity satisfaction; no generated varieties are computed.
"""

import logging
from dataclasses import dataclass
from itertools import product
from typing import Dict, List, Optional, Sequence

from congruences import Congruence, all_congruences
from identities import C1, CHAIN_BASES, E1, E2, LATDIST, PRODMEETDIST, satisfies
from lattice import is_chain
from reports import Report, witness_from
from srl_monoid import SrlMonoid

log = logging.getLogger(__name__)


def _exponent_range(s: SrlMonoid) -> range:
    """Exponents m with 2^m running past the carrier size, where power sequences are constant."""
    return range(max(1, s.n).bit_length() + 2)


def laf1_suite(s: SrlMonoid) -> Report:
    """
    E1 and E2 each imply C1. Under C1, (avb)^(2^m) = a^(2^m) v b^(2^m) for negative a, b.
    Under E2, box^(2^n)((avb)^(2^m)) = box^(2^n)(a^(2^m)) v box^(2^n)(b^(2^m)).
    Parts that do not apply pass with a note in the detail.
    """
    report = Report(title="power-laws", algebra=s.name)
    has_c1, has_e1, has_e2 = satisfies(s, C1), satisfies(s, E1), satisfies(s, E2)
    report.add("E1-implies-C1", has_c1 or not has_e1, detail=f"E1={has_e1} C1={has_c1}")
    report.add("E2-implies-C1", has_c1 or not has_e2, detail=f"E2={has_e2} C1={has_c1}")

    neg = [a for a in s.elements if s.is_negative(a)]
    exps = _exponent_range(s)

    if has_c1:
        bad = next(
            (
                (a, b, m)
                for a, b in product(neg, repeat=2)
                for m in exps
                if s.pow(s.join(a, b), 2 ** m) != s.join(s.pow(a, 2 ** m), s.pow(b, 2 ** m))
            ),
            None,
        )
        witness = None if bad is None else {**witness_from(s.names, "ab", bad[:2]), "m": str(bad[2])}
        report.add("join-powers", bad is None, witness, "(avb)^(2^m) = a^(2^m) v b^(2^m)")
    else:
        report.add("join-powers", True, detail="C1 fails: not applicable")

    if has_e2:
        bad = None
        for a, b in product(neg, repeat=2):
            for m, k in product(exps, repeat=2):
                p = 2 ** m
                lhs = s.box_pow(2 ** k, s.pow(s.join(a, b), p))
                rhs = s.join(s.box_pow(2 ** k, s.pow(a, p)), s.box_pow(2 ** k, s.pow(b, p)))
                if lhs != rhs:
                    bad = (a, b, m, k)
                    break
            if bad is not None:
                break
        witness = None if bad is None else {**witness_from(s.names, "ab", bad[:2]), "m": str(bad[2]), "n": str(bad[3])}
        report.add("join-box-powers", bad is None, witness, "box^(2^n)((avb)^(2^m)) splits over v")
    else:
        report.add("join-box-powers", True, detail="E2 fails: not applicable")
    return report


@dataclass(frozen=True)
class SubdirectVerdict:
    irreducible: bool
    monolith: Optional[Congruence]

    def __bool__(self) -> bool:
        return self.irreducible


def is_subdirectly_irreducible(s: SrlMonoid, congruences: Optional[List[Congruence]] = None) -> SubdirectVerdict:
    """SI iff the nontrivial congruences have a least element (the monolith)."""
    congruences = all_congruences(s) if congruences is None else congruences
    delta = Congruence.identity(s.n)
    nontrivial = [t for t in congruences if t != delta]
    if not nontrivial:
        return SubdirectVerdict(False, None)
    smallest = min(nontrivial, key=lambda t: (t.pair_count(), t.labels))
    if all(smallest <= t for t in nontrivial):
        return SubdirectVerdict(True, smallest)
    return SubdirectVerdict(False, None)


def basis_verdicts(s: SrlMonoid) -> Dict[str, bool]:
    return {key: all(satisfies(s, i) for i in basis) for key, basis in CHAIN_BASES.items()}


def src_membership_report(s: SrlMonoid, congruences: Optional[List[Congruence]] = None) -> Report:
    """One algebra: the three bases agree; a member satisfies both distributive laws; an SI member is a chain."""
    report = Report(title="chain-variety", algebra=s.name)
    verdicts = basis_verdicts(s)
    agree = len(set(verdicts.values())) == 1
    report.add("bases-agree", agree, detail=" ".join(f"{k}={v}" for k, v in verdicts.items()))

    member = any(verdicts.values())
    if member:
        for identity in (LATDIST, PRODMEETDIST):
            values = identity.counterexample(s)
            report.add(
                identity.tag,
                values is None,
                witness_from(s.names, identity.variables, values) if values is not None else None,
                identity.text,
            )
        si = is_subdirectly_irreducible(s, congruences)
        chain = is_chain(s.lattice)
        report.add("si-member-is-chain", chain or not si.irreducible, detail=f"si={si.irreducible} chain={chain}")
    else:
        report.add("member", True, detail="no basis satisfied: distributivity not required")
    return report


def src_membership_suite(catalog: Sequence[SrlMonoid]) -> Report:
    """Per-algebra membership reports merged into one, check names prefixed by algebra."""
    report = Report(title="chain-variety", algebra="catalog")
    for s in catalog:
        single = src_membership_report(s)
        for result in single.results:
            report.add(f"{s.name}/{result.check}", result.passed, result.witness, result.detail)
    log.debug(f"src_membership algebras={len(catalog)} passed={report.passed}")
    return report
