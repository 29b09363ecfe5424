"""
srl-workbench CLI — load, verify and analyze finite srl-monoids.
Each verb runs one module's operations and prints reports to stdout.

Exit codes: 0 all checks passed, 1 a mathematical check failed, 2 input error.
"""

import argparse
import sys
from pathlib import Path
from typing import List, Optional, Sequence

sys.path.insert(0, str(Path(__file__).resolve().parent))

from algebra_file import Algebra, dump_algebra, resolve_target
from config import CATALOG_DIR, MAX_SIZE, VERIFY_THEORY
from errors import AlgebraError, InternalInvariantViolation, PreconditionError
from lmonoid import CommutativeLMonoid, verify_lmonoid
from reports import Report, render

EXIT_OK, EXIT_FAILED, EXIT_INPUT = 0, 1, 2


def _srl(algebra: Algebra):
    from srl_monoid import SrlMonoid

    if not isinstance(algebra, SrlMonoid):
        raise PreconditionError("this verb needs an srl-monoid (a file with arrow or Q)")
    return algebra


def _elements(s, tokens: Optional[str]) -> List[int]:
    if not tokens:
        return []
    return [s.lattice.index_of(t) for t in tokens.split(",") if t.strip()]


def _emit(reports: Sequence[Report], fmt: str) -> bool:
    print(render(reports, fmt, witnesses=True))
    return all(r.passed for r in reports)


def _classification_line(s) -> str:
    from srl_monoid import classify, q_names

    flags = " ".join(f"{k}={v}" for k, v in classify(s).to_dict().items())
    return f"{s.name or 'algebra'}: size={s.n} {flags} Q={{{','.join(q_names(s))}}}"


def run_check(target: str, fmt: str = "text") -> tuple[bool, str]:
    """
    Both bases and the arrow definition (or the l-monoid laws alone) plus classification
    flags. Tables are loaded without law validation, so a broken law is a failed
    check with its witness.
    """
    algebra = resolve_target(target, validate=False)
    if isinstance(algebra, CommutativeLMonoid):
        ok = _emit([verify_lmonoid(algebra, target)], fmt)
        return ok, "l-monoid laws hold" if ok else "l-monoid laws fail"
    from srl_checks import definition_check, verify_basis_corollary, verify_basis_thm1

    print(_classification_line(algebra))
    ok = _emit([verify_basis_thm1(algebra), verify_basis_corollary(algebra), definition_check(algebra)], fmt)
    return ok, "both bases hold" if ok else "a basis or definition check fails"


def run_residuate(target: str, q: str) -> tuple[bool, str]:
    """Residuate an l-monoid relative to Q and print the resulting algebra file."""
    from srl_monoid import SrlMonoid, residuate_from_Q

    algebra = resolve_target(target)
    monoid = algebra.monoid if isinstance(algebra, SrlMonoid) else algebra
    q_set = [monoid.lattice.index_of(t) for t in q.split(",") if t.strip()]
    name = algebra.name if isinstance(algebra, SrlMonoid) else Path(target).stem
    s = residuate_from_Q(monoid, q_set, name=name)
    print(dump_algebra(s), end="")
    return True, "residuated"


def run_congruences(target: str, fmt: str = "text", witnesses: bool = False, verify: Optional[bool] = None) -> tuple[bool, str]:
    from congruences import (
        all_congruences,
        all_strongly_convex,
        class_of_e,
        lemma_c3_c4_suite,
        scs_characterization_suite,
        verify_order_iso,
    )
    from variety import is_subdirectly_irreducible

    s = _srl(resolve_target(target))
    congruences = all_congruences(s)
    scs = all_strongly_convex(s)
    print(f"Con: {len(congruences)}")
    for t in congruences:
        print(f"  {t.format(s.names)}  e-block={class_of_e(s, t, verify).format(s.names)}")
    print(f"SCS: {len(scs)}")
    for h in scs:
        print(f"  {h.format(s.names)}")
    si = is_subdirectly_irreducible(s, congruences)
    monolith = si.monolith.format(s.names) if si.monolith else "none"
    print(f"subdirectly irreducible: {si.irreducible} monolith: {monolith}")
    reports = [verify_order_iso(s, congruences, scs)]
    if witnesses:
        reports += [lemma_c3_c4_suite(s, congruences), scs_characterization_suite(s, congruences)]
    ok = _emit(reports, fmt)
    return ok, f"|Con|={len(congruences)} |SCS|={len(scs)}"


def run_convex(target: str, gen: str, witnesses: bool = False, verify: Optional[bool] = None) -> tuple[bool, str]:
    """C[S] by formula, cross-checked against the intersection of all strongly convex subalgebras unless fast."""
    from convex_generation import generated_scs, generated_scs_oracle

    verify = VERIFY_THEORY if verify is None else verify
    s = _srl(resolve_target(target))
    members = _elements(s, gen)
    result = generated_scs(s, members, verify)
    print(f"C[{','.join(s.names[a] for a in members)}] = {result.format(s.names)}")
    if witnesses:
        for line in result.witness_lines(s.names):
            print(f"  {line}")
    if not verify:
        return True, "generated"
    oracle = generated_scs_oracle(s, members)
    if result.mask != oracle.mask:
        print(f"oracle disagrees: {oracle.format(s.names)}")
        return False, "formula and oracle disagree"
    return True, "generated and matched against the oracle"


def run_principal(target: str, pair: str, fmt: str = "text", verify: Optional[bool] = None) -> tuple[bool, str]:
    from convex_generation import lemma_pc1_check, principal_theta_via_thmpc
    from congruences import principal_congruence_bruteforce
    from srl_monoid import s_term

    s = _srl(resolve_target(target))
    elements = _elements(s, pair)
    if len(elements) != 2:
        raise PreconditionError("--pair needs exactly two elements, e.g. --pair a,b")
    a, b = elements
    theta = principal_theta_via_thmpc(s, a, b, verify)
    brute = principal_congruence_bruteforce(s, a, b)
    print(f"theta({s.names[a]},{s.names[b]}) = {theta.format(s.names)}  s={s.names[s_term(s, a, b)]}")
    report = lemma_pc1_check(s, a, b, verify)
    report.add("formula-equals-closure", theta == brute, None if theta == brute else {"closure": brute.format(s.names)})
    ok = _emit([report], fmt)
    return ok, "principal congruence computed"


def run_identity(target: str, tags: Sequence[str], fmt: str = "text") -> tuple[bool, str]:
    from identities import CHAIN_IDENTITIES, check_all, lookup

    s = _srl(resolve_target(target))
    identities = [lookup(t) for t in tags] if tags else list(CHAIN_IDENTITIES.values())
    ok = _emit([check_all(s, identities, "identities")], fmt)
    return ok, "identities hold" if ok else "an identity fails"


def run_enumerate(max_size: int, catalog_dir: Path, verify: Optional[bool]) -> tuple[bool, str]:
    from suites.full import build_catalog

    entries = build_catalog(max_size, catalog_dir, verify)
    for k in range(1, max_size + 1):
        print(f"n={k}: {sum(1 for e in entries if e.size == k)}")
    return True, f"{len(entries)} algebras written to {catalog_dir}"


def run_examples() -> tuple[bool, str]:
    from golden_algebras import builtin_examples

    for key, s in builtin_examples().items():
        print(f"examples:{key}  {_classification_line(s)}")
    return True, "builtin examples listed"


def run_suite(
    target: str,
    max_size: int,
    catalog_dir: Path,
    fmt: str,
    witnesses: bool,
    verify: Optional[bool],
) -> tuple[bool, str]:
    if target == "full":
        from suites.full import run_full_suite

        return run_full_suite(max_size, catalog_dir, fmt, witnesses, verify)
    from suites.algebra_suite import run_algebra_suite

    s = _srl(resolve_target(target))
    ok = _emit(run_algebra_suite(s, verify), fmt)
    return ok, "all suites passed" if ok else "a suite failed"


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(description="srl-workbench — finite srl-monoid construction and verification")
    parser.add_argument("verb", choices=["check", "residuate", "congruences", "convex", "principal", "identity", "enumerate", "examples", "suite"])
    parser.add_argument("targets", nargs="*", help="algebra file, examples:<name>, or 'full' for suite; identity takes tags after the target")
    parser.add_argument("--max-size", type=int, default=MAX_SIZE, help="catalog size bound")
    parser.add_argument("--catalog", type=Path, default=CATALOG_DIR, help="catalog directory")
    parser.add_argument("--format", choices=["text", "tsv"], default="text", dest="fmt")
    parser.add_argument("--fast", action="store_true", help="skip redundant re-verification")
    parser.add_argument("--witnesses", action="store_true", help="print membership witnesses and supporting reports")
    parser.add_argument("--gen", type=str, help="generators for convex, e.g. a,b")
    parser.add_argument("--pair", type=str, help="pair for principal, e.g. a,b")
    parser.add_argument("--q", type=str, help="Q for residuate, e.g. 0,e")
    return parser


def run(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    verify = False if args.fast else None
    target = args.targets[0] if args.targets else None

    needs_target = args.verb not in ("enumerate", "examples")
    if needs_target and not target:
        print(f"Error: {args.verb} needs a target (file path or examples:<name>)", file=sys.stderr)
        return EXIT_INPUT
    try:
        if args.verb == "check":
            ok, msg = run_check(target, args.fmt)
        elif args.verb == "residuate":
            if not args.q:
                print("Error: residuate needs --q", file=sys.stderr)
                return EXIT_INPUT
            ok, msg = run_residuate(target, args.q)
        elif args.verb == "congruences":
            ok, msg = run_congruences(target, args.fmt, args.witnesses, verify)
        elif args.verb == "convex":
            ok, msg = run_convex(target, args.gen or "", args.witnesses, verify)
        elif args.verb == "principal":
            ok, msg = run_principal(target, args.pair or "", args.fmt, verify)
        elif args.verb == "identity":
            ok, msg = run_identity(target, args.targets[1:], args.fmt)
        elif args.verb == "enumerate":
            ok, msg = run_enumerate(args.max_size, args.catalog, verify)
        elif args.verb == "examples":
            ok, msg = run_examples()
        else:
            ok, msg = run_suite(target, args.max_size, args.catalog, args.fmt, args.witnesses, verify)
    except InternalInvariantViolation as e:
        print(f"Invariant violated: {e}", file=sys.stderr)
        return EXIT_FAILED
    except AlgebraError as e:
        print(f"Error: {e}", file=sys.stderr)
        return EXIT_INPUT
    print(msg, file=sys.stderr)
    return EXIT_OK if ok else EXIT_FAILED


def main():
    return run()


if __name__ == "__main__":
    sys.exit(main())
