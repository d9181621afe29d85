"""Scenario and report types for the verification suite."""

from collections.abc import Callable
from dataclasses import dataclass, field
from enum import Enum
from typing import Any

from braidforge.models.schemas import CheckDoc, ReportDoc


class ReportStatus(str, Enum):
    PASSED = "passed"
    FAILED = "failed"


@dataclass
class Check:
    """A named assertion with the values it was decided on."""

    name: str
    passed: bool
    evidence: dict[str, Any] = field(default_factory=dict)
    detail: str = ""

    @property
    def status(self) -> ReportStatus:
        return ReportStatus.PASSED if self.passed else ReportStatus.FAILED


@dataclass(frozen=True)
class Scenario:
    """A reproducible claim: fixed parameters plus a function producing checks."""

    id: str
    anchor: str
    params: dict[str, Any]
    run: Callable[[dict[str, Any]], list[Check]]


@dataclass
class Report:
    scenario: str
    anchor: str
    params: dict[str, Any] = field(default_factory=dict)
    checks: list[Check] = field(default_factory=list)
    errors: list[str] = field(default_factory=list)
    duration_seconds: float = 0.0
    internal_error: bool = False

    @property
    def status(self) -> ReportStatus:
        if self.errors or not self.checks or not all(c.passed for c in self.checks):
            return ReportStatus.FAILED
        return ReportStatus.PASSED

    @property
    def passed(self) -> bool:
        return self.status is ReportStatus.PASSED

    def to_doc(self) -> ReportDoc:
        return ReportDoc(
            scenario=self.scenario,
            anchor=self.anchor,
            status=self.status.value,
            params=self.params,
            checks=[
                CheckDoc(name=c.name, status=c.status.value, evidence=c.evidence, detail=c.detail)
                for c in self.checks
            ],
            errors=self.errors,
            duration_seconds=round(self.duration_seconds, 3),
        )

    def format_text(self) -> str:
        lines = [f"[{self.status.value.upper()}] {self.scenario}: {self.anchor}"]
        for check in self.checks:
            lines.append(f"  {check.status.value:<6} {check.name}")
            for key, value in check.evidence.items():
                lines.append(f"         {key}: {value}")
            if check.detail:
                lines.append(f"         {check.detail}")
        for error in self.errors:
            lines.append(f"  error  {error}")
        lines.append(f"  ({self.duration_seconds:.2f}s)")
        return "\n".join(lines)
