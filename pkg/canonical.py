"""
Canonical forms for isomorphism rejection.

The form is the lexicographically least byte encoding of (unit, leq, prod, arrow)
over every carrier ordering that respects a signature of isomorphism invariants.
Classes of equal signature are ordered by signature, so only permutations inside
each class are tried; e always comes first.
"""

import hashlib
from dataclasses import dataclass, field
from itertools import permutations, product
from typing import List, Optional, Sequence, Tuple

from config import CANONICAL_MAX
from errors import PreconditionError, SizeBound
from lattice import build_lattice
from lmonoid import CommutativeLMonoid
from srl_monoid import SrlMonoid


@dataclass(frozen=True)
class CanonicalForm:
    """code is the minimal encoding; order[i] is the original element placed at position i."""

    size: int
    code: bytes
    order: Tuple[int, ...] = field(compare=False)

    @property
    def digest(self) -> str:
        return hashlib.sha1(self.code).hexdigest()[:16]


def _popcount(mask: int) -> int:
    return bin(mask).count("1")


def signature(s: SrlMonoid, a: int) -> Tuple[int, ...]:
    lat = s.lattice
    sq = s.mul(a, a)
    return (
        0 if a == s.e else 1,
        _popcount(lat.down[a]),
        _popcount(lat.up[a]),
        int(s.box(a) == a),
        int(sq == a),
        _popcount(lat.down[sq]),
        _popcount(lat.down[s.box(a)]),
        int(s.is_negative(a)),
    )


def _encode(s: SrlMonoid, order: Sequence[int]) -> bytes:
    position = {old: new for new, old in enumerate(order)}
    out = [s.n, position[s.e]]
    out.extend(int(s.le(a, b)) for a in order for b in order)
    out.extend(position[s.mul(a, b)] for a in order for b in order)
    out.extend(position[s.imp(a, b)] for a in order for b in order)
    return bytes(out)


def _orderings(classes: List[List[int]]):
    for parts in product(*(permutations(c) for c in classes)):
        yield tuple(a for part in parts for a in part)


def canonicalize(s: SrlMonoid) -> CanonicalForm:
    """Minimal encoding over signature-respecting orderings. Raises SizeBound above the configured cap."""
    if s.n > CANONICAL_MAX:
        raise SizeBound("canonical form", s.n, CANONICAL_MAX)
    groups = {}
    for a in s.elements:
        groups.setdefault(signature(s, a), []).append(a)
    classes = [groups[key] for key in sorted(groups)]
    best_code, best_order = None, None
    for order in _orderings(classes):
        code = _encode(s, order)
        if best_code is None or code < best_code:
            best_code, best_order = code, order
    return CanonicalForm(size=s.n, code=best_code, order=best_order)


def relabel(s: SrlMonoid, perm: Sequence[int], name: Optional[str] = None) -> SrlMonoid:
    """The isomorphic copy where old element a becomes perm[a]; display names travel with their elements."""
    n = s.n
    if sorted(perm) != list(range(n)):
        raise PreconditionError(f"not a permutation of 0..{n - 1}: {list(perm)}")
    inverse = [0] * n
    for old, new in enumerate(perm):
        inverse[new] = old
    leq = [[s.le(inverse[i], inverse[j]) for j in range(n)] for i in range(n)]
    names = [s.names[inverse[i]] for i in range(n)]
    prod = tuple(tuple(perm[s.mul(inverse[i], inverse[j])] for j in range(n)) for i in range(n))
    arrow = [[perm[s.imp(inverse[i], inverse[j])] for j in range(n)] for i in range(n)]
    monoid = CommutativeLMonoid(lattice=build_lattice(n, leq, names), prod=prod, unit=perm[s.e])
    return SrlMonoid.unchecked(monoid, arrow, s.name if name is None else name)


def canonical_algebra(s: SrlMonoid, form: Optional[CanonicalForm] = None, name: Optional[str] = None) -> SrlMonoid:
    """The representative laid out in canonical order, with index names."""
    form = canonicalize(s) if form is None else form
    perm = [0] * s.n
    for new, old in enumerate(form.order):
        perm[old] = new
    copy = relabel(s, perm, name)
    lattice = build_lattice(s.n, copy.lattice.leq, [str(i) for i in range(s.n)])
    monoid = CommutativeLMonoid(lattice=lattice, prod=copy.monoid.prod, unit=copy.e)
    return SrlMonoid.unchecked(monoid, copy.arrow, copy.name)
