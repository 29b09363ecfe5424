"""
Check reports — the one output shape every verification returns.
A failed check is report content with a witness, never an exception.
Rendering is deterministic: checks keep insertion order, witnesses keep variable order.
"""

from dataclasses import dataclass, field
from typing import Any, Dict, Iterable, List, Optional, Sequence


Witness = Dict[str, str]


@dataclass
class CheckResult:
    """One named check. witness maps variable -> element name for the first failing assignment."""

    check: str
    passed: bool
    witness: Optional[Witness] = None
    detail: str = ""

    def to_dict(self) -> dict:
        return {
            "check": self.check,
            "passed": self.passed,
            "witness": dict(self.witness) if self.witness else None,
            "detail": self.detail,
        }


@dataclass
class Report:
    """Ordered list of check results for one algebra (or one catalog run)."""

    title: str
    algebra: str = ""
    results: List[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    @property
    def failures(self) -> List[CheckResult]:
        return [r for r in self.results if not r.passed]

    def add(self, check: str, passed: bool, witness: Optional[Witness] = None, detail: str = "") -> CheckResult:
        result = CheckResult(check=check, passed=bool(passed), witness=witness, detail=detail)
        self.results.append(result)
        return result

    def extend(self, other: "Report", prefix: Optional[str] = None) -> None:
        """Append another report's results, prefixing check names with its title (or prefix)."""
        tag = other.title if prefix is None else prefix
        for r in other.results:
            name = f"{tag}/{r.check}" if tag else r.check
            self.results.append(CheckResult(name, r.passed, r.witness, r.detail))

    def result(self, check: str) -> Optional[CheckResult]:
        return next((r for r in self.results if r.check == check), None)

    def to_dict(self) -> dict:
        return {
            "title": self.title,
            "algebra": self.algebra,
            "passed": self.passed,
            "results": [r.to_dict() for r in self.results],
        }


def witness_from(names: Sequence[str], labels: Sequence[str], values: Sequence[int]) -> Witness:
    """Build a witness dict from parallel label/value sequences, rendering values by element name."""
    return {label: names[v] for label, v in zip(labels, values)}


def format_witness(witness: Optional[Witness]) -> str:
    if not witness:
        return ""
    return ", ".join(f"{k}={v}" for k, v in witness.items())


def format_text(reports: Iterable[Report], witnesses: bool = True) -> str:
    """Human-readable rendering, one line per check."""
    lines: List[str] = []
    for report in reports:
        header = f"== {report.title}"
        if report.algebra:
            header += f" [{report.algebra}]"
        header += f": {'PASS' if report.passed else 'FAIL'}"
        lines.append(header)
        for r in report.results:
            line = f"  {'ok  ' if r.passed else 'FAIL'} {r.check}"
            if r.detail:
                line += f"  {r.detail}"
            if witnesses and r.witness:
                line += f"  ({format_witness(r.witness)})"
            lines.append(line)
    return "\n".join(lines)


def format_tsv(reports: Iterable[Report], witnesses: bool = True) -> str:
    """Machine-readable rendering: algebra, report, check, verdict, witness, detail."""
    rows = ["algebra\treport\tcheck\tverdict\twitness\tdetail"]
    for report in reports:
        for r in report.results:
            rows.append(
                "\t".join(
                    [
                        report.algebra,
                        report.title,
                        r.check,
                        "pass" if r.passed else "fail",
                        format_witness(r.witness) if witnesses else "",
                        r.detail.replace("\t", " "),
                    ]
                )
            )
    return "\n".join(rows)


def render(reports: Sequence[Report], fmt: str = "text", witnesses: bool = True) -> str:
    if fmt == "tsv":
        return format_tsv(reports, witnesses)
    return format_text(reports, witnesses)


def summarize(reports: Sequence[Report]) -> Dict[str, Any]:
    total = sum(len(r.results) for r in reports)
    failed = sum(len(r.failures) for r in reports)
    return {"reports": len(reports), "checks": total, "failed": failed, "passed": failed == 0}
