# Copyright The pertalex contributors
# SPDX-License-Identifier: Apache-2.0

import typing as t
from abc import ABC, abstractmethod
from dataclasses import dataclass

from ..corpus import Corpus


@dataclass(frozen=True)
class CheckResult:
    """Outcome of one check on one subject.

    Parameters
    ----------
    check: str
        Name of the check.
    subject: str
        What was checked, e.g. a knot presentation or a family.
    passed: bool
        True if the actual value matches the expected one.
    expected: str, optional
        Rendered expected value.
    actual: str, optional
        Rendered actual value.
    finding: bool, optional
        The mismatch is a conjecture finding rather than a defect. Default is False.
    skipped: bool, optional
        The subject was out of reach, e.g. beyond an enumeration guard. Default is False.
    """

    check: str
    subject: str
    passed: bool
    expected: str = ""
    actual: str = ""
    finding: bool = False
    skipped: bool = False

    @property
    def status(self) -> str:
        if self.skipped:
            return "skip"
        if self.passed:
            return "pass"
        return "finding" if self.finding else "fail"

    def asdict(self) -> dict:
        return {
            "check": self.check,
            "subject": self.subject,
            "status": self.status,
            "expected": self.expected,
            "actual": self.actual,
        }


class _CheckABC(ABC):
    """ABC for all verification checks.

    Creating a new check
    --------------------
    Create a class in this directory inheriting from _CheckABC. It is picked up by
    ``pertalex.verify`` and selectable by its NAME.
    """

    NAME: t.ClassVar[str]
    DESCRIPTION: t.ClassVar[str] = ""

    @abstractmethod
    def run(self, corpus: Corpus) -> t.List[CheckResult]:
        raise NotImplementedError

    def compare(self, subject: str, expected: t.Any, actual: t.Any) -> CheckResult:
        """Result of an exact comparison."""
        return CheckResult(
            check=self.NAME,
            subject=subject,
            passed=expected == actual,
            expected=str(expected),
            actual=str(actual),
        )

    def skip(self, subject: str, reason: str) -> CheckResult:
        return CheckResult(
            check=self.NAME, subject=subject, passed=False, actual=reason, skipped=True
        )
