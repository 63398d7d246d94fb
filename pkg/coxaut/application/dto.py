"""Application DTOs shared by the verification suites.

These are pure data carriers between layers, separate from the CLI's
pydantic transport models.
"""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(slots=True)
class CheckResult:
    """Outcome of one atomic check.

    Attributes:
        check_id: Stable identifier, e.g. ``figure1.edge.sigma(1,2)-alpha(2,3)``.
        passed: Whether the check held.
        detail: Short human-readable evidence or failure reason.

    """

    check_id: str
    passed: bool
    detail: str = ""

    def line(self) -> str:
        """Render as ``PASS|FAIL <check-id> <detail>``."""
        status = "PASS" if self.passed else "FAIL"
        return f"{status} {self.check_id} {self.detail}".rstrip()


@dataclass(slots=True)
class VerificationReport:
    """Ordered collection of checks produced by one suite."""

    suite: str
    checks: list[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        """True iff every check passed (an empty report passes)."""
        return all(check.passed for check in self.checks)

    @property
    def failures(self) -> list[CheckResult]:
        """Checks that did not hold."""
        return [check for check in self.checks if not check.passed]

    def add(self, check_id: str, passed: bool, detail: str = "") -> CheckResult:
        """Append a check and return it."""
        result = CheckResult(check_id, passed, detail)
        self.checks.append(result)
        return result

    def extend(self, other: VerificationReport) -> None:
        """Append every check of ``other``."""
        self.checks.extend(other.checks)

    def lines(self) -> list[str]:
        """One output line per check, in order."""
        return [check.line() for check in self.checks]
