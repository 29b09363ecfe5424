"""
Builtin algebras and the construction recipes behind them.

Golden tables (addressed as examples:<name>):
- ex2: the 3-chain 0 < e < 1, not integral, Q = {0, e}
- ex3: the 3-chain 0 < a < 1, integral, a*a = 0, Q = {0, 1}
- diamond: 0 < a, b < 1 with product = meet, Q = {0, 1}

Recipes: finite Lukasiewicz chain pairs, subresiduated lattices,
Heyting chains and integral algebras with a chain of designated elements.
"""

from fractions import Fraction
from typing import Dict, Iterable, Optional, Sequence

from errors import NotASubchain, PreconditionError
from lattice import FiniteLattice, chain, lattice_from_pairs
from lmonoid import CommutativeLMonoid, build_lmonoid, meet_monoid
from srl_monoid import SrlMonoid, residuate_from_Q


def chain_monoid(prod: Sequence[Sequence[int]], unit: int, names: Optional[Sequence[str]] = None) -> CommutativeLMonoid:
    """An l-monoid over the chain 0 < 1 < ... < n-1."""
    return build_lmonoid(chain(len(prod), names=names), prod, unit)


def example_2() -> SrlMonoid:
    prod = [
        [0, 0, 0],
        [0, 1, 2],
        [0, 2, 2],
    ]
    return residuate_from_Q(chain_monoid(prod, unit=1, names=("0", "e", "1")), {0, 1}, name="ex2")


def example_3() -> SrlMonoid:
    prod = [
        [0, 0, 0],
        [0, 0, 1],
        [0, 1, 2],
    ]
    return residuate_from_Q(chain_monoid(prod, unit=2, names=("0", "a", "1")), {0, 2}, name="ex3")


def diamond_lattice() -> FiniteLattice:
    return lattice_from_pairs(4, [(0, 1), (0, 2), (1, 3), (2, 3)], names=("0", "a", "b", "1"))


def diamond() -> SrlMonoid:
    return subresiduated_lattice(diamond_lattice(), {0, 3}, name="diamond")


BUILTINS = {
    "ex2": example_2,
    "ex3": example_3,
    "diamond": diamond,
}


def builtin_examples() -> Dict[str, SrlMonoid]:
    """The golden algebras in a fixed order."""
    return {key: build() for key, build in BUILTINS.items()}


def builtin(name: str) -> SrlMonoid:
    build = BUILTINS.get(name)
    if build is None:
        raise PreconditionError(f"unknown builtin '{name}' (known: {', '.join(BUILTINS)})")
    return build()


# ─── Recipes ──────────────────────────────────────────────────────────────


def _fraction_name(value: Fraction) -> str:
    return str(value.numerator) if value.denominator == 1 else f"{value.numerator}/{value.denominator}"


def lukasiewicz_chain(m: int) -> CommutativeLMonoid:
    """The m-element MV-chain {0, 1/(m-1), ..., 1} with truncated product max(0, a + b - 1)."""
    if m < 2:
        raise PreconditionError("Lukasiewicz chains need at least 2 elements")
    top = m - 1
    names = [_fraction_name(Fraction(i, top)) for i in range(m)]
    prod = [[max(0, i + j - top) for j in range(m)] for i in range(m)]
    return chain_monoid(prod, unit=top, names=names)


def lukasiewicz_pair(m: int, n: int) -> SrlMonoid:
    """
    The m-chain with Q the image of the n-chain. Needs (n-1) | (m-1) so that the
    smaller chain embeds as a subalgebra; raises NotASubchain otherwise.
    """
    if m < 2 or n < 2:
        raise PreconditionError("Lukasiewicz pair needs m, n >= 2")
    if (m - 1) % (n - 1) != 0:
        raise NotASubchain(f"L{n} does not embed in L{m}: {n - 1} does not divide {m - 1}")
    step = (m - 1) // (n - 1)
    q = range(0, m, step)
    return residuate_from_Q(lukasiewicz_chain(m), q, name=f"L{m}/L{n}")


def subresiduated_lattice(lattice: FiniteLattice, q: Iterable[int], name: str = "") -> SrlMonoid:
    """Product = meet and e = top on a distributive lattice, residuated relative to q."""
    return residuate_from_Q(meet_monoid(lattice), q, name=name)


def heyting_chain(k: int) -> SrlMonoid:
    """The k-element chain with product = meet and Q = everything (a Heyting algebra)."""
    return subresiduated_lattice(chain(k), range(k), name=f"H{k}")


def integral_chain_pair(monoid: CommutativeLMonoid, q: Iterable[int], name: str = "") -> SrlMonoid:
    """
    Integral recipe: e is the top, Q is a chain containing bottom and top and
    closed under the product. The residual always exists since 0 is a candidate.
    """
    lat = monoid.lattice
    q_set = frozenset(q)
    if monoid.unit != lat.top:
        raise PreconditionError("integral recipe needs e to be the top element")
    if lat.bottom not in q_set or lat.top not in q_set:
        raise PreconditionError("Q must contain bottom and top")
    if any(not (lat.le(a, b) or lat.le(b, a)) for a in q_set for b in q_set):
        raise PreconditionError("Q must be a chain")
    return residuate_from_Q(monoid, q_set, name=name)

