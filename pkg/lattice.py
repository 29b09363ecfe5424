"""
Finite Lattice — validated order relation with derived meet/join tables.
The order matrix is the source of truth; meet and join are caches computed once.
Elements are 0..n-1 with no assumed relation between index order and lattice order.

Down-sets and up-sets are kept as int bitmasks:
- meet(a, b) is the element whose down-set equals down(a) & down(b)
- join(a, b) is the element whose up-set equals up(a) & up(b)
"""

from dataclasses import dataclass
from itertools import permutations, product
from typing import Dict, FrozenSet, Iterable, Iterator, List, Optional, Sequence, Tuple

from errors import NotALattice, NotAPartialOrder, PreconditionError

ElementId = int
ElementSet = FrozenSet[int]
Table = Tuple[Tuple[int, ...], ...]


# ─── Bitmask helpers ──────────────────────────────────────────────────────


def to_mask(elements: Iterable[int]) -> int:
    mask = 0
    for x in elements:
        mask |= 1 << x
    return mask


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of mask in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def from_mask(mask: int) -> ElementSet:
    return frozenset(bits(mask))


# ─── Lattice type ─────────────────────────────────────────────────────────


@dataclass(frozen=True)
class FiniteLattice:
    """
    Immutable finite lattice. Build with build_lattice or lattice_from_pairs;
    the direct constructor does not validate.
    """

    leq: Tuple[Tuple[bool, ...], ...]
    names: Tuple[str, ...]
    meet_table: Table
    join_table: Table
    down: Tuple[int, ...]
    up: Tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.names)

    @property
    def elements(self) -> range:
        return range(self.n)

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def le(self, a: ElementId, b: ElementId) -> bool:
        return self.leq[a][b]

    def meet(self, a: ElementId, b: ElementId) -> ElementId:
        return self.meet_table[a][b]

    def join(self, a: ElementId, b: ElementId) -> ElementId:
        return self.join_table[a][b]

    @property
    def top(self) -> ElementId:
        return next(a for a in self.elements if self.down[a] == self.full_mask)

    @property
    def bottom(self) -> ElementId:
        return next(a for a in self.elements if self.up[a] == self.full_mask)

    def interval(self, a: ElementId, b: ElementId) -> int:
        """Bitmask of [a, b] (empty when a is not below b)."""
        return self.up[a] & self.down[b]

    def name(self, a: ElementId) -> str:
        return self.names[a]

    def index_of(self, token: str) -> ElementId:
        """Resolve a display name, falling back to a decimal index."""
        token = token.strip()
        if token in self.names:
            return self.names.index(token)
        if token.isdigit() and int(token) < self.n:
            return int(token)
        raise PreconditionError(f"unknown element '{token}' (known: {', '.join(self.names)})")


# ─── Construction ─────────────────────────────────────────────────────────


def _default_names(n: int) -> Tuple[str, ...]:
    return tuple(str(i) for i in range(n))


def _check_partial_order(n: int, leq: Sequence[Sequence[bool]]) -> None:
    for a in range(n):
        if not leq[a][a]:
            raise NotAPartialOrder("reflexivity", (a,))
    for a in range(n):
        for b in range(a + 1, n):
            if leq[a][b] and leq[b][a]:
                raise NotAPartialOrder("antisymmetry", (a, b))
    for a, b, c in product(range(n), repeat=3):
        if leq[a][b] and leq[b][c] and not leq[a][c]:
            raise NotAPartialOrder("transitivity", (a, b, c))


def build_lattice(n: int, leq: Sequence[Sequence[bool]], names: Optional[Sequence[str]] = None) -> FiniteLattice:
    """
    Validate an n x n order matrix and derive meet/join by scanning bounds.
    Raises NotAPartialOrder or NotALattice (with the offending pair).
    """
    if n < 1:
        raise PreconditionError("a lattice needs at least one element")
    if len(leq) != n or any(len(row) != n for row in leq):
        raise PreconditionError(f"order matrix must be {n}x{n}")
    names = tuple(names) if names is not None else _default_names(n)
    if len(names) != n or len(set(names)) != n:
        raise PreconditionError("element names must be n distinct strings")

    matrix = tuple(tuple(bool(v) for v in row) for row in leq)
    _check_partial_order(n, matrix)

    down = tuple(to_mask(b for b in range(n) if matrix[b][a]) for a in range(n))
    up = tuple(to_mask(b for b in range(n) if matrix[a][b]) for a in range(n))
    by_down: Dict[int, int] = {mask: a for a, mask in enumerate(down)}
    by_up: Dict[int, int] = {mask: a for a, mask in enumerate(up)}

    meet_rows: List[Tuple[int, ...]] = []
    join_rows: List[Tuple[int, ...]] = []
    for a in range(n):
        meet_row, join_row = [], []
        for b in range(n):
            glb = by_down.get(down[a] & down[b])
            if glb is None:
                raise NotALattice("greatest lower bound", (a, b))
            lub = by_up.get(up[a] & up[b])
            if lub is None:
                raise NotALattice("least upper bound", (a, b))
            meet_row.append(glb)
            join_row.append(lub)
        meet_rows.append(tuple(meet_row))
        join_rows.append(tuple(join_row))

    return FiniteLattice(
        leq=matrix,
        names=names,
        meet_table=tuple(meet_rows),
        join_table=tuple(join_rows),
        down=down,
        up=up,
    )


def order_closure(n: int, pairs: Iterable[Tuple[int, int]]) -> List[List[bool]]:
    """Reflexive-transitive closure of a relation given as (i, j) pairs meaning i <= j."""
    rel = [[i == j for j in range(n)] for i in range(n)]
    for i, j in pairs:
        if not (0 <= i < n and 0 <= j < n):
            raise PreconditionError(f"order pair ({i}, {j}) out of range for size {n}")
        rel[i][j] = True
    for k in range(n):
        for i in range(n):
            if rel[i][k]:
                row_k = rel[k]
                row_i = rel[i]
                for j in range(n):
                    if row_k[j]:
                        row_i[j] = True
    return rel


def lattice_from_pairs(
    n: int,
    pairs: Iterable[Tuple[int, int]],
    names: Optional[Sequence[str]] = None,
) -> FiniteLattice:
    """Build from a cover (Hasse) relation or a full relation; both close to the same order."""
    return build_lattice(n, order_closure(n, pairs), names)


def chain(n: int, names: Optional[Sequence[str]] = None) -> FiniteLattice:
    """The n-element chain 0 < 1 < ... < n-1."""
    return lattice_from_pairs(n, [(i, i + 1) for i in range(n - 1)], names)


# ─── Queries ──────────────────────────────────────────────────────────────


def is_chain(lat: FiniteLattice) -> bool:
    """True iff any two elements are comparable."""
    return all(lat.le(a, b) or lat.le(b, a) for a in lat.elements for b in lat.elements)


def max_of_subset(lat: FiniteLattice, s: Iterable[ElementId]) -> Optional[ElementId]:
    """The element of s dominating all of s, or None (also for empty s)."""
    members = sorted(set(s))
    if not members:
        return None
    mask = to_mask(members)
    for x in members:
        if mask & ~lat.down[x] == 0:
            return x
    return None


def is_distributive(lat: FiniteLattice) -> bool:
    m, j = lat.meet, lat.join
    return all(
        m(a, j(b, c)) == j(m(a, b), m(a, c))
        for a, b, c in product(lat.elements, repeat=3)
    )


def lattice_law_violations(lat: FiniteLattice) -> List[Tuple[str, Tuple[int, ...]]]:
    """
    Exhaustive lattice-law audit of the derived tables. Empty for every lattice
    accepted by build_lattice.
    """
    m, j, le = lat.meet, lat.join, lat.le
    out: List[Tuple[str, Tuple[int, ...]]] = []
    for a in lat.elements:
        if m(a, a) != a or j(a, a) != a:
            out.append(("idempotence", (a,)))
    for a, b in product(lat.elements, repeat=2):
        if m(a, b) != m(b, a) or j(a, b) != j(b, a):
            out.append(("commutativity", (a, b)))
        if m(a, j(a, b)) != a or j(a, m(a, b)) != a:
            out.append(("absorption", (a, b)))
        if le(a, b) != (m(a, b) == a) or le(a, b) != (j(a, b) == b):
            out.append(("order consistency", (a, b)))
    for a, b, c in product(lat.elements, repeat=3):
        if m(m(a, b), c) != m(a, m(b, c)) or j(j(a, b), c) != j(a, j(b, c)):
            out.append(("associativity", (a, b, c)))
    return out


def automorphisms(lat: FiniteLattice) -> List[Tuple[int, ...]]:
    """All order automorphisms as tuples perm[old] = new."""
    n = lat.n
    signature = [(bin(lat.down[a]).count("1"), bin(lat.up[a]).count("1")) for a in range(n)]
    out = []
    for perm in permutations(range(n)):
        if any(signature[a] != signature[perm[a]] for a in range(n)):
            continue
        if all(lat.le(a, b) == lat.le(perm[a], perm[b]) for a in range(n) for b in range(n)):
            out.append(perm)
    return out
