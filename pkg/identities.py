"""
Identity registry — equations and inequations over the srl-monoid signature,
evaluated by exhaustive assignment.

Each Identity holds two term functions over an algebra A (anything with meet,
join, mul, imp, le and e). Terms are plain lambdas; no term rewriting.
"""

from dataclasses import dataclass
from itertools import product
from typing import TYPE_CHECKING, Callable, Dict, List, Optional, Sequence, Tuple

from errors import PreconditionError
from reports import CheckResult, Report, witness_from

if TYPE_CHECKING:
    from srl_monoid import SrlMonoid

Term = Callable[..., int]


@dataclass(frozen=True)
class Identity:
    """Universally quantified lhs = rhs (relation 'eq') or lhs <= rhs (relation 'le')."""

    tag: str
    text: str
    variables: Tuple[str, ...]
    relation: str
    lhs: Term
    rhs: Term

    def holds_at(self, s: "SrlMonoid", values: Sequence[int]) -> bool:
        left = self.lhs(s, *values)
        right = self.rhs(s, *values)
        if self.relation == "eq":
            return left == right
        return s.le(left, right)

    def counterexample(self, s: "SrlMonoid") -> Optional[Tuple[int, ...]]:
        """First failing assignment in lexicographic index order, or None."""
        for values in product(s.elements, repeat=len(self.variables)):
            if not self.holds_at(s, values):
                return values
        return None


def check_identity(s: "SrlMonoid", identity: Identity) -> CheckResult:
    """Exhaustive verdict; a failure carries the first witnessing assignment by element name."""
    values = identity.counterexample(s)
    if values is None:
        return CheckResult(check=identity.tag, passed=True, detail=identity.text)
    return CheckResult(
        check=identity.tag,
        passed=False,
        witness=witness_from(s.names, identity.variables, values),
        detail=identity.text,
    )


def satisfies(s: "SrlMonoid", identity: Identity) -> bool:
    return identity.counterexample(s) is None


def check_all(s: "SrlMonoid", identities: Sequence[Identity], title: str) -> Report:
    report = Report(title=title, algebra=s.name)
    report.results.extend(check_identity(s, i) for i in identities)
    return report


def _box(A, x):
    return A.imp(A.e, x)


def _eq(tag, text, variables, lhs, rhs) -> Identity:
    return Identity(tag, text, tuple(variables), "eq", lhs, rhs)


def _le(tag, text, variables, lhs, rhs) -> Identity:
    return Identity(tag, text, tuple(variables), "le", lhs, rhs)


# ─── Six-identity basis (together with the l-monoid laws) ──────────────────

THM1_BASIS: List[Identity] = [
    _le("1", "e <= (x^y)->y", "xy", lambda A, x, y: A.e, lambda A, x, y: A.imp(A.meet(x, y), y)),
    _le(
        "2",
        "x->y <= (z^e)->(x->y)",
        "xyz",
        lambda A, x, y, z: A.imp(x, y),
        lambda A, x, y, z: A.imp(A.meet(z, A.e), A.imp(x, y)),
    ),
    _le("3", "x*(x->y) <= y", "xy", lambda A, x, y: A.mul(x, A.imp(x, y)), lambda A, x, y: y),
    _eq(
        "4",
        "z->(x^y) = (z->x)^(z->y)",
        "xyz",
        lambda A, x, y, z: A.imp(z, A.meet(x, y)),
        lambda A, x, y, z: A.meet(A.imp(z, x), A.imp(z, y)),
    ),
    _eq(
        "5",
        "e->((e->x)*(e->y)) = (e->x)*(e->y)",
        "xy",
        lambda A, x, y: _box(A, A.mul(_box(A, x), _box(A, y))),
        lambda A, x, y: A.mul(_box(A, x), _box(A, y)),
    ),
    _le(
        "6",
        "e->y <= x->(x*(e->y))",
        "xy",
        lambda A, x, y: _box(A, y),
        lambda A, x, y: A.imp(x, A.mul(x, _box(A, y))),
    ),
]

# ─── Eight-identity basis ─────────────────────────────────────────────────

COROLLARY_BASIS: List[Identity] = [
    _eq(
        "1",
        "z->(x^y) = (z->x)^(z->y)",
        "xyz",
        lambda A, x, y, z: A.imp(z, A.meet(x, y)),
        lambda A, x, y, z: A.meet(A.imp(z, x), A.imp(z, y)),
    ),
    _eq(
        "2",
        "(xvy)->z = (x->z)^(y->z)",
        "xyz",
        lambda A, x, y, z: A.imp(A.join(x, y), z),
        lambda A, x, y, z: A.meet(A.imp(x, z), A.imp(y, z)),
    ),
    _le(
        "3",
        "(x->y)*(y->z) <= x->z",
        "xyz",
        lambda A, x, y, z: A.mul(A.imp(x, y), A.imp(y, z)),
        lambda A, x, y, z: A.imp(x, z),
    ),
    _le("4", "e <= x->x", "x", lambda A, x: A.e, lambda A, x: A.imp(x, x)),
    _le("5", "x*(x->y) <= y", "xy", lambda A, x, y: A.mul(x, A.imp(x, y)), lambda A, x, y: y),
    _le(
        "6",
        "x->y <= (z^e)->(x->y)",
        "xyz",
        lambda A, x, y, z: A.imp(x, y),
        lambda A, x, y, z: A.imp(A.meet(z, A.e), A.imp(x, y)),
    ),
    _eq(
        "7",
        "box(box(x)*box(y)) = box(x)*box(y)",
        "xy",
        lambda A, x, y: _box(A, A.mul(_box(A, x), _box(A, y))),
        lambda A, x, y: A.mul(_box(A, x), _box(A, y)),
    ),
    _le(
        "8",
        "box(y) <= x->(x*box(y))",
        "xy",
        lambda A, x, y: _box(A, y),
        lambda A, x, y: A.imp(x, A.mul(x, _box(A, y))),
    ),
]

# ─── Chain-variety identities ─────────────────────────────────────────────

C1 = _le("C1", "e <= (x->y)v(y->x)", "xy", lambda A, x, y: A.e, lambda A, x, y: A.join(A.imp(x, y), A.imp(y, x)))
C2 = _eq(
    "C2",
    "e^(xvy) = (e^x)v(e^y)",
    "xy",
    lambda A, x, y: A.meet(A.e, A.join(x, y)),
    lambda A, x, y: A.join(A.meet(A.e, x), A.meet(A.e, y)),
)
E1 = _eq(
    "E1",
    "(x^y)->z = (x->z)v(y->z)",
    "xyz",
    lambda A, x, y, z: A.imp(A.meet(x, y), z),
    lambda A, x, y, z: A.join(A.imp(x, z), A.imp(y, z)),
)
E2 = _eq(
    "E2",
    "z->(xvy) = (z->x)v(z->y)",
    "zxy",
    lambda A, z, x, y: A.imp(z, A.join(x, y)),
    lambda A, z, x, y: A.join(A.imp(z, x), A.imp(z, y)),
)
LATDIST = _eq(
    "LATDIST",
    "(xvy)^z = (x^z)v(y^z)",
    "xyz",
    lambda A, x, y, z: A.meet(A.join(x, y), z),
    lambda A, x, y, z: A.join(A.meet(x, z), A.meet(y, z)),
)
PRODMEETDIST = _eq(
    "PRODMEETDIST",
    "x*(y^z) = (x*y)^(x*z)",
    "xyz",
    lambda A, x, y, z: A.mul(x, A.meet(y, z)),
    lambda A, x, y, z: A.meet(A.mul(x, y), A.mul(x, z)),
)

CHAIN_IDENTITIES: Dict[str, Identity] = {i.tag: i for i in (C1, C2, E1, E2, LATDIST, PRODMEETDIST)}

# Alternative equational bases (with the srl-monoid identities) for the chain-generated subvariety
CHAIN_BASES: Dict[str, Tuple[Identity, ...]] = {
    "C2+E2": (C2, E2),
    "E1+C2": (E1, C2),
    "C1+C2": (C1, C2),
}


def lookup(tag: str) -> Identity:
    """Resolve a tag such as 'E2', 'thm1:3' or 'cor:7'."""
    key = tag.strip()
    upper = key.upper()
    if upper in CHAIN_IDENTITIES:
        return CHAIN_IDENTITIES[upper]
    prefix, _, number = key.partition(":")
    registry = {"thm1": THM1_BASIS, "cor": COROLLARY_BASIS}.get(prefix.lower())
    if registry is not None:
        for identity in registry:
            if identity.tag == number:
                return identity
    known = sorted(CHAIN_IDENTITIES) + [f"thm1:{i.tag}" for i in THM1_BASIS] + [f"cor:{i.tag}" for i in COROLLARY_BASIS]
    raise PreconditionError(f"unknown identity '{tag}' (known: {', '.join(known)})")
