"""
Enumeration Stage — every srl-monoid up to isomorphism, by size.

Pipeline per size n:
  1. lattices on n elements (naturally labeled: i <= j implies i <= j as integers), deduped
  2. units from the automorphism-orbit representatives of each lattice
  3. commutative products by backtracking over the upper triangle with monotonicity pruning,
     then the full l-monoid law check
  4. every Q containing e closed under meet, join and product, residuated via residuate_from_Q
  5. dedup by canonical form; representatives are stored in canonical order

bruteforce_count is the independent oracle (no lattice dedup, no unit orbits, no pruning).
"""

import logging
from concurrent.futures import ProcessPoolExecutor
from itertools import combinations, permutations, product
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

from canonical import CanonicalForm, canonical_algebra, canonicalize
from config import ENUM_CAP, ENUM_HARD_CAP, ENUMERATION_LOG, VERIFY_THEORY, WORKERS
from errors import (
    AlgebraError,
    InternalInvariantViolation,
    NotALattice,
    NotAnLMonoid,
    NotAPartialOrder,
    NotResiduated,
    SizeBound,
)
from identities import COROLLARY_BASIS, THM1_BASIS, satisfies
from lattice import FiniteLattice, automorphisms, build_lattice, order_closure
from lmonoid import CommutativeLMonoid, build_lmonoid
from srl_monoid import SrlMonoid, residuate_from_Q, subalgebra_violation

logging.basicConfig(
    level=logging.INFO,
    format="%(asctime)s [%(levelname)s] %(message)s",
    handlers=[logging.FileHandler(ENUMERATION_LOG), logging.StreamHandler()],
)
log = logging.getLogger(__name__)


# ─── Lattices ─────────────────────────────────────────────────────────────


def _lattice_code(lat: FiniteLattice) -> bytes:
    n = lat.n
    return min(
        bytes(int(lat.le(p[a], p[b])) for a in range(n) for b in range(n))
        for p in permutations(range(n))
    )


def enumerate_lattices(n: int) -> List[FiniteLattice]:
    """One lattice per isomorphism type on n elements; 0 is the bottom and n-1 the top."""
    if n == 1:
        return [build_lattice(1, [[True]])]
    middle = list(combinations(range(1, n - 1), 2))
    seen: Dict[bytes, FiniteLattice] = {}
    for k in range(1 << len(middle)):
        pairs = [middle[i] for i in range(len(middle)) if k >> i & 1]
        pairs += [(0, a) for a in range(n)] + [(a, n - 1) for a in range(n)]
        try:
            lat = build_lattice(n, order_closure(n, pairs))
        except NotALattice:
            continue
        seen.setdefault(_lattice_code(lat), lat)
    return [seen[code] for code in sorted(seen)]


def unit_candidates(lat: FiniteLattice) -> List[int]:
    """Least element of each automorphism orbit."""
    autos = automorphisms(lat)
    return sorted({min(p[a] for p in autos) for a in lat.elements})


# ─── Products ─────────────────────────────────────────────────────────────


def _monotone_ok(lat: FiniteLattice, table: List[List[Optional[int]]], a: int, b: int) -> bool:
    """Newly filled cell (a, b) is consistent with every filled comparable cell in row b."""
    v = table[a][b]
    for c in lat.elements:
        w = table[c][b]
        if w is None:
            continue
        if lat.le(c, a) and not lat.le(w, v):
            return False
        if lat.le(a, c) and not lat.le(v, w):
            return False
    return True


def _products_job(job: Tuple[FiniteLattice, int]) -> List[Tuple[Tuple[int, ...], ...]]:
    """Every valid commutative product on lat with the given unit, as tables."""
    lat, unit = job
    n = lat.n
    table: List[List[Optional[int]]] = [[None] * n for _ in range(n)]
    for a in lat.elements:
        table[unit][a] = table[a][unit] = a
    cells = [(a, b) for a in range(n) for b in range(a, n) if a != unit and b != unit]
    found = []

    def fill(i: int) -> None:
        if i == len(cells):
            candidate = tuple(tuple(row) for row in table)
            try:
                build_lmonoid(lat, candidate, unit)
            except NotAnLMonoid:
                return
            found.append(candidate)
            return
        a, b = cells[i]
        for v in lat.elements:
            table[a][b] = table[b][a] = v
            if _monotone_ok(lat, table, a, b) and _monotone_ok(lat, table, b, a):
                fill(i + 1)
        table[a][b] = table[b][a] = None

    fill(0)
    return found


def enumerate_lmonoids(n: int, workers: Optional[int] = None) -> List[CommutativeLMonoid]:
    """Commutative l-monoids on every lattice type, one search job per (lattice, unit)."""
    workers = WORKERS if workers is None else workers
    jobs = [(lat, u) for lat in enumerate_lattices(n) for u in unit_candidates(lat)]
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            tables = list(pool.map(_products_job, jobs))
    else:
        tables = [_products_job(job) for job in jobs]
    out = []
    for (lat, unit), found in zip(jobs, tables):
        out.extend(CommutativeLMonoid(lattice=lat, prod=t, unit=unit) for t in found)
    return out


# ─── Q subsets ────────────────────────────────────────────────────────────


def q_candidates(m: CommutativeLMonoid) -> Iterator[frozenset]:
    """Subsets containing e closed under meet, join and product."""
    for mask in range(1 << m.n):
        if not mask >> m.unit & 1:
            continue
        q = frozenset(a for a in m.elements if mask >> a & 1)
        if subalgebra_violation(m, q) is None:
            yield q


def srl_monoids_over(m: CommutativeLMonoid) -> Iterator[SrlMonoid]:
    for q in q_candidates(m):
        try:
            yield residuate_from_Q(m, q)
        except NotResiduated:
            continue


# ─── Catalog ──────────────────────────────────────────────────────────────


def _dedup(algebras: Iterable[SrlMonoid], size: int) -> List[Tuple[CanonicalForm, SrlMonoid]]:
    forms: Dict[bytes, Tuple[CanonicalForm, SrlMonoid]] = {}
    for s in algebras:
        form = canonicalize(s)
        if form.code not in forms:
            forms[form.code] = (form, canonical_algebra(s, form, name=f"n{size}-{form.digest[:8]}"))
    return [forms[code] for code in sorted(forms)]


def _check_cap(n: int) -> None:
    cap = min(ENUM_CAP, ENUM_HARD_CAP)
    if n > cap:
        raise SizeBound("enumeration", n, cap)


def enumerate_size(n: int, verify: Optional[bool] = None, workers: Optional[int] = None) -> List[Tuple[CanonicalForm, SrlMonoid]]:
    """All srl-monoids of exactly n elements up to isomorphism, in canonical-code order."""
    _check_cap(n)
    verify = VERIFY_THEORY if verify is None else verify
    monoids = enumerate_lmonoids(n, workers)
    found = _dedup((s for m in monoids for s in srl_monoids_over(m)), n)
    if verify:
        for _, s in found:
            for identity in (*THM1_BASIS, *COROLLARY_BASIS):
                if not satisfies(s, identity):
                    raise InternalInvariantViolation("enumerated algebra fails a basis identity", (s.name, identity.tag))
    log.info(f"size_enumerated size={n} lmonoids={len(monoids)} srl_monoids={len(found)}")
    return found


def enumerate_srl_monoids(n: int, verify: Optional[bool] = None, workers: Optional[int] = None) -> List[SrlMonoid]:
    """Every srl-monoid of size 1..n up to isomorphism, ordered by size then canonical code."""
    _check_cap(n)
    out: List[SrlMonoid] = []
    for k in range(1, n + 1):
        out.extend(s for _, s in enumerate_size(k, verify, workers))
    log.info(f"enumeration_done max_size={n} count={len(out)}")
    return out


# ─── Brute-force oracle and candidate tables ──────────────────────────────


BRUTEFORCE_MAX = 3
FULL_CANDIDATE_MAX = 2


def _all_lattices_labeled(n: int) -> Iterator[FiniteLattice]:
    for bits_ in product((False, True), repeat=n * n):
        leq = [list(bits_[i * n:(i + 1) * n]) for i in range(n)]
        try:
            yield build_lattice(n, leq)
        except (NotAPartialOrder, NotALattice):
            continue


def _all_lmonoids_labeled(n: int) -> Iterator[CommutativeLMonoid]:
    for lat in _all_lattices_labeled(n):
        for unit in lat.elements:
            for flat in product(range(n), repeat=n * n):
                prod = [flat[i * n:(i + 1) * n] for i in range(n)]
                if any(prod[unit][a] != a for a in range(n)):
                    continue
                try:
                    yield build_lmonoid(lat, prod, unit)
                except NotAnLMonoid:
                    continue


def bruteforce_count(n: int) -> int:
    """Isomorphism types of size-n srl-monoids by exhaustive labeled search (n <= 3)."""
    if n > BRUTEFORCE_MAX:
        raise SizeBound("brute-force oracle", n, BRUTEFORCE_MAX)
    codes = set()
    for m in _all_lmonoids_labeled(n):
        for mask in range(1 << n):
            try:
                s = residuate_from_Q(m, [a for a in range(n) if mask >> a & 1])
            except AlgebraError:
                continue
            codes.add(canonicalize(s).code)
    log.info(f"bruteforce_count size={n} count={len(codes)}")
    return len(codes)


def table_candidates(n: int, monoids: Optional[Sequence[CommutativeLMonoid]] = None) -> Iterator[SrlMonoid]:
    """
    Every arrow table over each given l-monoid (default: all labeled l-monoids of size n),
    wrapped unchecked for the basis cross-check.
    """
    if monoids is None:
        if n > FULL_CANDIDATE_MAX:
            raise SizeBound("table candidates without explicit monoids", n, FULL_CANDIDATE_MAX)
        monoids = list(_all_lmonoids_labeled(n))
    for m in monoids:
        for flat in product(range(m.n), repeat=m.n * m.n):
            arrow = [flat[i * m.n:(i + 1) * m.n] for i in range(m.n)]
            yield SrlMonoid.unchecked(m, arrow)
