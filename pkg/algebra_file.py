"""
Algebra file format: one JSON document per algebra.

    {
      "name": "ex2",
      "size": 3,
      "elements": ["0", "e", "1"],
      "leq": [[0, 1], [1, 2]],
      "prod": [[0, 0, 0], [0, 1, 2], [0, 2, 2]],
      "unit": 1,
      "Q": [0, 1]
    }

leq pairs (i, j) mean i <= j and are closed reflexively and transitively, so Hasse
or full relations both load. At most one of arrow / Q; with neither the document is
a plain commutative l-monoid. Indices are 0-based.
"""

import json
import re
from pathlib import Path
from typing import List, Optional, Tuple, Union

from pydantic import BaseModel, ConfigDict, Field, ValidationError, model_validator

from errors import AlgebraFileError
from golden_algebras import builtin
from lattice import lattice_from_pairs
from lmonoid import CommutativeLMonoid, build_lmonoid, verify_lmonoid
from srl_monoid import SrlMonoid, residuate_from_Q, srl_from_arrow

BUILTIN_PREFIX = "examples:"

Algebra = Union[CommutativeLMonoid, SrlMonoid]


class AlgebraDocument(BaseModel):
    model_config = ConfigDict(extra="forbid", populate_by_name=True)

    name: str = ""
    size: int = Field(ge=1)
    elements: Optional[List[str]] = None
    leq: List[Tuple[int, int]] = Field(default_factory=list)
    prod: List[List[int]]
    unit: int
    arrow: Optional[List[List[int]]] = None
    q: Optional[List[int]] = Field(default=None, alias="Q")

    @model_validator(mode="after")
    def _check_shape(self) -> "AlgebraDocument":
        n = self.size
        if self.elements is not None and len(self.elements) != n:
            raise ValueError(f"elements: expected {n} names, got {len(self.elements)}")
        if self.arrow is not None and self.q is not None:
            raise ValueError("arrow and Q are mutually exclusive")
        for field_name in ("prod", "arrow"):
            table = getattr(self, field_name)
            if table is None:
                continue
            if len(table) != n or any(len(row) != n for row in table):
                raise ValueError(f"{field_name}: expected a {n}x{n} matrix")
            if any(not 0 <= v < n for row in table for v in row):
                raise ValueError(f"{field_name}: entries must be indices in 0..{n - 1}")
        if any(not (0 <= i < n and 0 <= j < n) for i, j in self.leq):
            raise ValueError(f"leq: pairs must be indices in 0..{n - 1}")
        if not 0 <= self.unit < n:
            raise ValueError(f"unit: {self.unit} is not an index in 0..{n - 1}")
        if self.q is not None and any(not 0 <= v < n for v in self.q):
            raise ValueError(f"Q: entries must be indices in 0..{n - 1}")
        return self


def _line_of(text: str, key: str) -> Optional[int]:
    match = re.search(rf'"{re.escape(key)}"\s*:', text)
    if match is None:
        return None
    return text.count("\n", 0, match.start()) + 1


def _file_error(exc: ValidationError, text: str) -> AlgebraFileError:
    first = exc.errors()[0]
    loc = [str(part) for part in first.get("loc", ())]
    message = first.get("msg", "invalid value")
    if loc:
        field = ".".join(loc)
        return AlgebraFileError(message, field=field, line=_line_of(text, loc[0]))
    # model-level checks name the field at the start of the message
    head = message.removeprefix("Value error, ")
    field, sep, rest = head.partition(": ")
    if sep and (field in AlgebraDocument.model_fields or field == "Q"):
        return AlgebraFileError(rest, field=field, line=_line_of(text, field))
    return AlgebraFileError(head)


def parse_document(text: str) -> AlgebraDocument:
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise AlgebraFileError(exc.msg, line=exc.lineno) from exc
    if not isinstance(raw, dict):
        raise AlgebraFileError("document must be a JSON object", line=1)
    try:
        return AlgebraDocument.model_validate(raw)
    except ValidationError as exc:
        raise _file_error(exc, text) from exc


def build_algebra(doc: AlgebraDocument, name: Optional[str] = None, validate: bool = True) -> Algebra:
    """
    Construct from a validated document; construction errors propagate unchanged.
    With validate off the order must still be a lattice, but the product and arrow
    are wrapped as given so that their laws can be reported rather than raised.
    """
    lattice = lattice_from_pairs(doc.size, doc.leq, names=doc.elements)
    label = doc.name if name is None else name
    if not validate:
        monoid = CommutativeLMonoid.unchecked(lattice, doc.prod, doc.unit)
        if doc.arrow is not None:
            return SrlMonoid.unchecked(monoid, doc.arrow, name=label)
        if doc.q is not None and verify_lmonoid(monoid).passed:
            return residuate_from_Q(monoid, doc.q, name=label)
        return monoid
    monoid = build_lmonoid(lattice, doc.prod, doc.unit)
    if doc.arrow is not None:
        return srl_from_arrow(monoid, doc.arrow, name=label)
    if doc.q is not None:
        return residuate_from_Q(monoid, doc.q, name=label)
    return monoid


def parse_algebra(text: str, name: Optional[str] = None, validate: bool = True) -> Algebra:
    return build_algebra(parse_document(text), name, validate)


def load_algebra(path: Union[str, Path], validate: bool = True) -> Algebra:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise AlgebraFileError(f"cannot read {path}: {exc.strerror}") from exc
    return parse_algebra(text, validate=validate)


def _document_for(algebra: Algebra, name: str = "") -> dict:
    if isinstance(algebra, SrlMonoid):
        monoid, arrow, label = algebra.monoid, algebra.arrow, name or algebra.name
    else:
        monoid, arrow, label = algebra, None, name
    n = monoid.n
    doc = {
        "name": label,
        "size": n,
        "elements": list(monoid.names),
        "leq": [[a, b] for a in range(n) for b in range(n) if a != b and monoid.le(a, b)],
        "prod": [list(row) for row in monoid.prod],
        "unit": monoid.unit,
    }
    if arrow is not None:
        doc["arrow"] = [list(row) for row in arrow]
    return doc


def dump_algebra(algebra: Algebra, name: str = "") -> str:
    """Full order relation, prod, unit and (for srl-monoids) arrow; one key per line."""
    doc = _document_for(algebra, name)
    lines = [f"  {json.dumps(key)}: {json.dumps(value)}" for key, value in doc.items()]
    return "{\n" + ",\n".join(lines) + "\n}\n"


def save_algebra(algebra: Algebra, path: Union[str, Path], name: str = "") -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(dump_algebra(algebra, name), encoding="utf-8")
    return path


def resolve_target(target: str, validate: bool = True) -> Algebra:
    """examples:<name> is a builtin; anything else is a file path."""
    if target.startswith(BUILTIN_PREFIX):
        return builtin(target[len(BUILTIN_PREFIX):])
    return load_algebra(target, validate)
