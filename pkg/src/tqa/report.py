"""Structured pass/fail reports for the verification suites."""

from __future__ import annotations

import json
from dataclasses import dataclass, field


@dataclass
class CheckResult:
    name: str
    degree: object
    passed: bool
    checked: int = 0
    witness: str | None = None

    def to_dict(self):
        return {"check": self.name, "degree": self.degree, "passed": self.passed,
                "checked": self.checked, "witness": self.witness}


@dataclass
class Report:
    title: str
    results: list = field(default_factory=list)

    def add(self, name, degree, failure=None, checked=0, quiver=None):
        """Record a check; ``failure`` is None or ``(input, offending output)``."""
        witness = None
        if failure is not None:
            witness = _describe(failure, quiver)
        self.results.append(CheckResult(name, degree, failure is None, checked, witness))

    def record(self, name, degree, passed, checked=0, witness=None):
        self.results.append(CheckResult(name, degree, bool(passed), checked, witness))

    def extend(self, other):
        self.results.extend(other.results)

    @property
    def passed(self):
        return all(r.passed for r in self.results)

    def failures(self):
        return [r for r in self.results if not r.passed]

    def to_dict(self):
        return {"report": self.title, "passed": self.passed,
                "checks": [r.to_dict() for r in self.results]}

    def to_json(self):
        return json.dumps(self.to_dict(), indent=2)

    def to_text(self):
        lines = []
        for r in self.results:
            status = "PASS" if r.passed else "FAIL"
            line = f"{status}  {r.name:<28} degree {r.degree!s:<6} ({r.checked} checked)"
            if r.witness:
                line += f"  witness: {r.witness}"
            lines.append(line)
        lines.append(f"{self.title}: {'all checks passed' if self.passed else 'FAILED'}")
        return "\n".join(lines)


def _describe(failure, quiver):
    from .resolutions import Chain, format_word

    item, bad = failure
    if quiver is None:
        return f"{item!r} -> {bad!r}"
    try:
        left = format_word(quiver, item)
    except (AttributeError, TypeError, ValueError):
        left = str(item)
    right = bad.format(quiver) if isinstance(bad, Chain) else str(bad)
    return f"{left} -> {right}"
