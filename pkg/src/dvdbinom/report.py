from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any


@dataclass
class VerificationReport:
    """Outcome of a verify_* routine.

    ``counterexample`` holds the first failing case (None when ``ok``);
    ``details`` carries check-specific extras for reporting.
    """

    name: str
    ok: bool
    checked: int
    counterexample: dict[str, Any] | None = None
    details: dict[str, Any] = field(default_factory=dict)

    def __bool__(self) -> bool:
        return self.ok

    def to_dict(self) -> dict[str, Any]:
        return {"check": self.name, "ok": self.ok, "checked": self.checked,
                "counterexample": self.counterexample, "details": self.details}

    @classmethod
    def merge(cls, name: str, reports) -> "VerificationReport":
        """Conjunction of several reports; keeps the first counterexample."""
        reports = list(reports)
        bad = next((r for r in reports if not r.ok), None)
        return cls(name, bad is None, sum(r.checked for r in reports),
                   None if bad is None else bad.counterexample)
