"""Pass/fail containers returned by the verification operations."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional


@dataclass(frozen=True)
class CheckLine:
    """One named check with its outcome."""

    label: str
    passed: bool


@dataclass(frozen=True)
class VerificationReport:
    """An ordered list of checks; passes only if every line does."""

    name: str
    lines: tuple[CheckLine, ...]

    @property
    def passed(self) -> bool:
        return all(line.passed for line in self.lines)

    @property
    def first_failure(self) -> Optional[CheckLine]:
        for line in self.lines:
            if not line.passed:
                return line
        return None

    def summary(self) -> str:
        failed = sum(1 for line in self.lines if not line.passed)
        if failed:
            return f"{self.name}: FAIL ({len(self.lines)} checks, {failed} failed)"
        return f"{self.name}: PASS ({len(self.lines)} checks)"
