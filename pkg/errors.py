"""
Exception hierarchy for the workbench.
Construction and input problems raise; mathematical check failures are report content.
"""

from typing import Any, Optional, Tuple


class AlgebraError(Exception):
    """Base for every error raised by the workbench."""

    pass


class NotAPartialOrder(AlgebraError):
    """Order relation is not reflexive, antisymmetric and transitive."""

    def __init__(self, law: str, witness: Tuple[int, ...]):
        self.law = law
        self.witness = witness
        super().__init__(f"order relation violates {law} at {witness}")


class NotALattice(AlgebraError):
    """Some pair lacks a greatest lower bound or a least upper bound."""

    def __init__(self, bound: str, pair: Tuple[int, int]):
        self.bound = bound
        self.pair = pair
        super().__init__(f"pair {pair} has no {bound}")


class NotAnLMonoid(AlgebraError):
    """Product table is not a commutative, associative, unital, join-distributive product."""

    def __init__(self, law: str, witness: Tuple[int, ...]):
        self.law = law
        self.witness = witness
        super().__init__(f"product violates {law} at {witness}")


class QNotSubalgebra(AlgebraError):
    """Designated set Q is not closed under meet, join, product or misses the unit."""

    def __init__(self, closure: str, witness: Tuple[int, ...]):
        self.closure = closure
        self.witness = witness
        super().__init__(f"Q is not closed under {closure}: witness {witness}")


class NotResiduated(AlgebraError):
    """Some pair (a, b) has no maximum of {q in Q : a*q <= b}."""

    def __init__(self, pair: Tuple[int, int], candidates: Tuple[int, ...]):
        self.pair = pair
        self.candidates = candidates
        reason = "empty candidate set" if not candidates else f"no greatest element in {candidates}"
        super().__init__(f"pair {pair} is not residuated: {reason}")


class BasisViolation(AlgebraError):
    """An arrow table fails one of the srl-monoid identities."""

    def __init__(self, identity: str, witness: Optional[dict]):
        self.identity = identity
        self.witness = witness
        super().__init__(f"identity {identity} fails at {witness}")


class GeneratorNotNegative(AlgebraError):
    """A generator of a strongly convex subalgebra is not below the unit."""

    def __init__(self, element: int, name: Optional[str] = None):
        self.element = element
        self.name = str(element) if name is None else name
        super().__init__(f"generator {self.name} is not in the negative cone")


class NotASubchain(AlgebraError):
    """The smaller Lukasiewicz chain does not embed in the larger one."""

    pass


class SizeBound(AlgebraError):
    """Carrier size exceeds a configured bound."""

    def __init__(self, what: str, size: int, bound: int):
        self.what = what
        self.size = size
        self.bound = bound
        super().__init__(f"{what}: size {size} exceeds bound {bound}")


class InternalInvariantViolation(AlgebraError):
    """A fact guaranteed by theory failed at runtime. Signals an implementation bug."""

    def __init__(self, what: str, detail: Any = None):
        self.what = what
        self.detail = detail
        super().__init__(f"{what}: {detail}" if detail is not None else what)


class PreconditionError(AlgebraError):
    """Operation called outside its documented precondition."""

    pass


class AlgebraFileError(AlgebraError):
    """Malformed algebra file. Carries the offending field and line when known."""

    def __init__(self, message: str, field: Optional[str] = None, line: Optional[int] = None):
        self.field = field
        self.line = line
        where = []
        if line is not None:
            where.append(f"line {line}")
        if field:
            where.append(f"field '{field}'")
        prefix = f"{', '.join(where)}: " if where else ""
        super().__init__(f"{prefix}{message}")
