"""Pydantic schemas for ``--json`` output."""

from __future__ import annotations

from typing import Any

from pydantic import BaseModel, Field

from coxaut.application import VerificationReport
from coxaut.domain import FailureReport


class ValueOutput(BaseModel):
    """Result of a single computation command."""

    command: str = Field(..., description="Subcommand name", examples=["reduce"])
    result: str = Field(..., description="Result in the command's text format")
    details: dict[str, Any] = Field(default_factory=dict, description="Structured extras")


class CheckOutput(BaseModel):
    """One atomic check of a verification suite."""

    check_id: str
    passed: bool
    detail: str = ""


class ReportOutput(BaseModel):
    """A verification suite and every check it ran."""

    suite: str
    passed: bool
    checks: list[CheckOutput]

    @classmethod
    def from_report(cls, report: VerificationReport) -> ReportOutput:
        """Map an application report to its transport form."""
        return cls(
            suite=report.suite,
            passed=report.passed,
            checks=[
                CheckOutput(check_id=c.check_id, passed=c.passed, detail=c.detail)
                for c in report.checks
            ],
        )


class HandlerFailureOutput(BaseModel):
    """Why one handler rejected a subset."""

    handler: str
    reason: str


class UnhandledOutput(BaseModel):
    """A subset that no handler discharges."""

    k: int
    members: list[str]
    failures: list[HandlerFailureOutput]


class FailureOutput(BaseModel):
    """Structured form of a failed certificate generation."""

    n: int
    d: int
    unhandled: list[UnhandledOutput]

    @classmethod
    def from_failure(cls, failure: FailureReport) -> FailureOutput:
        """Map a domain failure report to its transport form."""
        return cls(
            n=failure.n,
            d=failure.d,
            unhandled=[
                UnhandledOutput(
                    k=item.k,
                    members=[tag.label for tag in item.members],
                    failures=[
                        HandlerFailureOutput(handler=f.handler, reason=f.reason)
                        for f in item.failures
                    ],
                )
                for item in failure.unhandled
            ],
        )
