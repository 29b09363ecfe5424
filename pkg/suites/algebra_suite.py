"""
Every per-algebra invariant as one ordered report list.
Congruences and strongly convex subalgebras are computed once and shared.
"""

from typing import List, Optional

from congruences import (
    all_congruences,
    all_strongly_convex,
    lemma_c3_c4_suite,
    scs_characterization_suite,
    verify_order_iso,
)
from convex_generation import generation_suite, principal_suite, scs_lattice_ops_check
from reports import Report
from srl_checks import SRL_CORE_SUITES
from srl_monoid import SrlMonoid
from variety import laf1_suite, src_membership_report


def run_algebra_suite(s: SrlMonoid, verify: Optional[bool] = None) -> List[Report]:
    reports = [suite(s) for suite in SRL_CORE_SUITES]
    congruences = all_congruences(s)
    scs = all_strongly_convex(s)
    reports += [
        lemma_c3_c4_suite(s, congruences),
        verify_order_iso(s, congruences, scs),
        scs_characterization_suite(s, congruences),
        generation_suite(s, scs),
        principal_suite(s, verify),
        scs_lattice_ops_check(s, scs),
        laf1_suite(s),
        src_membership_report(s, congruences),
    ]
    return reports


def algebra_suite_passed(s: SrlMonoid, verify: Optional[bool] = None) -> bool:
    return all(r.passed for r in run_algebra_suite(s, verify))
