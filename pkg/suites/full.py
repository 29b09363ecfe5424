"""
Full Suite Stage — the single acceptance entry point.

Order:
  1. builtin algebras and recipe algebras through the per-algebra suite
  2. the catalog (replayed from disk, built first when missing) through the per-algebra suite
  3. catalog index reproducibility and enumeration soundness (brute-force counts,
     golden algebras located by canonical form, random relabelings)
  4. the table-complete basis cross-check and chain-variety membership over the catalog
"""

import logging
import random
from functools import partial
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path
from typing import Callable, Iterable, List, Optional, Sequence, Tuple

from canonical import canonicalize, relabel
from catalog import CatalogEntry, build_entry, load_catalog, write_catalog
from config import CANDIDATE_MAX, CATALOG_DIR, MAX_SIZE, RANDOM_SEED, RELABEL_TRIALS, SUITE_LOG, WORKERS
from enumeration import FULL_CANDIDATE_MAX, bruteforce_count, enumerate_lmonoids, enumerate_size, table_candidates
from errors import AlgebraFileError
from golden_algebras import builtin_examples, example_2, example_3, heyting_chain, lukasiewicz_pair
from identities import COROLLARY_BASIS, THM1_BASIS, satisfies
from reports import Report, render, summarize
from srl_monoid import SrlMonoid
from suites.algebra_suite import run_algebra_suite
from variety import src_membership_suite

logging.basicConfig(
    level=logging.INFO,
    format="%(asctime)s [%(levelname)s] %(message)s",
    handlers=[logging.FileHandler(SUITE_LOG), logging.StreamHandler()],
)
log = logging.getLogger(__name__)

ORACLE_MAX = 3  # brute-force counts are compared for sizes up to this


def recipe_algebras() -> List[SrlMonoid]:
    return [lukasiewicz_pair(3, 2), lukasiewicz_pair(3, 3), lukasiewicz_pair(5, 3), heyting_chain(3)]


def build_catalog(max_size: int, catalog_dir, verify: Optional[bool] = None, workers: Optional[int] = None) -> List[CatalogEntry]:
    """Enumerate every size up to max_size and persist the catalog."""
    entries: List[CatalogEntry] = []
    for k in range(1, max_size + 1):
        entries.extend(build_entry(s, form) for form, s in enumerate_size(k, verify, workers))
    write_catalog(entries, catalog_dir)
    log.info(f"catalog_built max_size={max_size} count={len(entries)} dir={catalog_dir}")
    return entries


def ensure_catalog(max_size: int, catalog_dir, verify: Optional[bool] = None, workers: Optional[int] = None) -> List[CatalogEntry]:
    """Replay from disk when the stored catalog covers max_size, else rebuild."""
    try:
        entries = load_catalog(catalog_dir, max_size)
    except AlgebraFileError as e:
        log.info(f"catalog_missing dir={catalog_dir} reason={e}")
        entries = []
    if not any(entry.size == max_size for entry in entries):
        entries = build_catalog(max_size, catalog_dir, verify, workers)
    return entries


def _parallel_map(fn: Callable, items: Sequence, workers: int) -> list:
    if workers > 1 and len(items) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(fn, items))
    return [fn(item) for item in items]


def catalog_index_report(entries: Sequence[CatalogEntry]) -> Report:
    """Stored flags and counts match a recomputation from the algebra."""
    report = Report(title="catalog-index", algebra="catalog")
    for entry in entries:
        fresh = build_entry(entry.algebra)
        same = fresh.summary() == entry.summary() and fresh.canonical_hash == entry.canonical_hash
        report.add(entry.name, same, detail=f"n_con={entry.n_con} n_scs={entry.n_scs}")
    return report


def enumeration_soundness_report(
    entries: Sequence[CatalogEntry],
    max_size: int,
    trials: int = RELABEL_TRIALS,
    seed: int = RANDOM_SEED,
) -> Report:
    report = Report(title="enumeration-soundness", algebra="catalog")
    codes = {canonicalize(e.algebra).code for e in entries}

    for k in range(1, min(max_size, ORACLE_MAX) + 1):
        have = sum(1 for e in entries if e.size == k)
        want = bruteforce_count(k)
        report.add(f"count/n{k}", have == want, detail=f"catalog={have} brute-force={want}")

    if max_size >= 3:
        for label, s in (("ex2", example_2()), ("ex3", example_3()), ("L3/L2", lukasiewicz_pair(3, 2))):
            report.add(f"contains/{label}", canonicalize(s).code in codes)

    rng = random.Random(seed)
    bad = None
    for entry in entries:
        n = entry.size
        for _ in range(trials):
            perm = list(range(n))
            rng.shuffle(perm)
            if canonicalize(relabel(entry.algebra, perm)).code not in codes:
                bad = (entry.name, perm)
                break
        if bad:
            break
    report.add(
        "relabel-closure",
        bad is None,
        {"algebra": bad[0], "perm": str(bad[1])} if bad else None,
        f"{trials} relabelings per entry",
    )

    basis_bad = next((e.name for e in entries if not all(satisfies(e.algebra, i) for i in (*THM1_BASIS, *COROLLARY_BASIS))), None)
    report.add("entries-satisfy-bases", basis_bad is None, {"algebra": basis_bad} if basis_bad else None)
    return report


def _verdicts_agree(s: SrlMonoid) -> bool:
    thm1 = all(satisfies(s, i) for i in THM1_BASIS)
    cor = all(satisfies(s, i) for i in COROLLARY_BASIS)
    return thm1 == cor


def _sweep(report: Report, check: str, candidates: Iterable[SrlMonoid]) -> None:
    count, bad = 0, None
    for s in candidates:
        count += 1
        if bad is None and not _verdicts_agree(s):
            bad = s.arrow
    report.add(check, bad is None, {"arrow": str(bad)} if bad else None, f"{count} candidates")


def basis_cross_check(entries: Sequence[CatalogEntry], candidate_max: int = CANDIDATE_MAX) -> Report:
    """
    Both bases give the same verdict on every table-complete candidate: all labeled
    l-monoids for the smallest sizes, every l-monoid type of size 3 with every arrow
    table over it, and every catalog algebra.
    """
    report = Report(title="basis-cross-check", algebra="candidates")
    for k in range(1, min(candidate_max, FULL_CANDIDATE_MAX) + 1):
        _sweep(report, f"tables/n{k}", table_candidates(k))
    if candidate_max >= 3:
        _sweep(report, "tables/n3", table_candidates(3, enumerate_lmonoids(3)))
    catalog_bad = next((e.name for e in entries if not _verdicts_agree(e.algebra)), None)
    report.add("catalog", catalog_bad is None, {"algebra": catalog_bad} if catalog_bad else None)
    return report


def full_suite_reports(
    max_size: Optional[int] = None,
    catalog_dir=None,
    verify: Optional[bool] = None,
    workers: Optional[int] = None,
) -> List[Report]:
    max_size = MAX_SIZE if max_size is None else max_size
    catalog_dir = Path(CATALOG_DIR if catalog_dir is None else catalog_dir)
    workers = WORKERS if workers is None else workers

    suite = partial(run_algebra_suite, verify=verify)
    reports: List[Report] = []
    golden = list(builtin_examples().values()) + recipe_algebras()
    for batch in _parallel_map(suite, golden, workers):
        reports.extend(batch)
    log.info(f"golden_checked count={len(golden)}")

    entries = ensure_catalog(max_size, catalog_dir, verify, workers)
    algebras = [e.algebra for e in entries]
    for batch in _parallel_map(suite, algebras, workers):
        reports.extend(batch)
    log.info(f"catalog_checked count={len(entries)}")

    reports.append(catalog_index_report(entries))
    reports.append(enumeration_soundness_report(entries, max_size))
    reports.append(basis_cross_check(entries))
    reports.append(src_membership_suite(algebras))
    return reports


def run_full_suite(
    max_size: Optional[int] = None,
    catalog_dir=None,
    fmt: str = "text",
    witnesses: bool = True,
    verify: Optional[bool] = None,
    workers: Optional[int] = None,
) -> Tuple[bool, str]:
    """Print every report to stdout. Returns (success, message)."""
    reports = full_suite_reports(max_size, catalog_dir, verify, workers)
    print(render(reports, fmt, witnesses))
    stats = summarize(reports)
    log.info(f"suite_done reports={stats['reports']} checks={stats['checks']} failed={stats['failed']}")
    if stats["failed"]:
        return False, f"{stats['failed']} of {stats['checks']} checks failed"
    return True, f"all {stats['checks']} checks passed in {stats['reports']} reports"
