"""Verification reports: one record per check, rendered as text or JSON."""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any

PASS, FAIL, NOT_APPLICABLE, ERROR = "pass", "fail", "not-applicable", "error"


@dataclass
class CheckResult:
    kind: str
    inputs: dict[str, Any]
    lhs: Any = None
    rhs: Any = None
    status: str = PASS
    seconds: float | None = None
    detail: str = ""
    extra: dict[str, Any] = field(default_factory=dict)

    def to_json(self, timing: bool = True) -> dict:
        out = {"kind": self.kind, "inputs": self.inputs, "lhs": self.lhs,
               "rhs": self.rhs, "status": self.status}
        if self.detail:
            out["detail"] = self.detail
        if self.extra:
            out.update(self.extra)
        if timing and self.seconds is not None:
            out["seconds"] = round(self.seconds, 6)
        return out


@dataclass
class VerificationReport:
    checks: list[CheckResult] = field(default_factory=list)

    @classmethod
    def single(cls, result: CheckResult) -> VerificationReport:
        return cls([result])

    def extend(self, other: VerificationReport) -> None:
        self.checks.extend(other.checks)

    @property
    def status(self) -> str:
        """Worst status over all checks."""
        statuses = {c.status for c in self.checks}
        for s in (ERROR, FAIL, PASS):
            if s in statuses:
                return s
        return NOT_APPLICABLE

    @property
    def passed(self) -> bool:
        return not any(c.status in (FAIL, ERROR) for c in self.checks)

    @property
    def lhs(self):
        return self.checks[0].lhs

    @property
    def rhs(self):
        return self.checks[0].rhs

    def to_json(self, timing: bool = True) -> dict:
        return {"status": self.status, "checks": [c.to_json(timing) for c in self.checks]}

    def dumps(self, timing: bool = True) -> str:
        return json.dumps(self.to_json(timing), indent=2, sort_keys=True)

    def to_text(self, timing: bool = True) -> str:
        lines = []
        for i, c in enumerate(self.checks, 1):
            head = f"[{i}] {c.kind:<12} {c.status.upper()}"
            if timing and c.seconds is not None:
                head += f"  ({c.seconds:.3f}s)"
            lines.append(head)
            if c.inputs:
                lines.append(f"    inputs: {json.dumps(c.inputs, sort_keys=True)}")
            if c.lhs is not None:
                lines.append(f"    lhs:    {json.dumps(c.lhs)}")
            if c.rhs is not None:
                lines.append(f"    rhs:    {json.dumps(c.rhs)}")
            for key, val in c.extra.items():
                lines.append(f"    {key}: {json.dumps(val)}")
            if c.detail:
                lines.append(f"    note:   {c.detail}")
        lines.append(f"overall: {self.status.upper()}")
        return "\n".join(lines)
