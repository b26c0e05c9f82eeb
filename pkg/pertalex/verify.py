# Copyright The pertalex contributors
# SPDX-License-Identifier: Apache-2.0

import logging
import typing as t
from dataclasses import dataclass

from . import _checks
from ._checks import CheckResult
from .corpus import Corpus, load_corpus

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class VerificationReport:
    """Results of a verification run.

    Parameters
    ----------
    results: tuple of CheckResult
        Every result in the order the checks produced them.
    """

    results: t.Tuple[CheckResult, ...]

    @property
    def failures(self) -> t.List[CheckResult]:
        """Failed results, conjecture findings included."""
        return [r for r in self.results if r.status in ("fail", "finding")]

    @property
    def ok(self) -> bool:
        return len(self.failures) == 0

    def counts(self) -> t.Dict[str, int]:
        counts = {"pass": 0, "fail": 0, "finding": 0, "skip": 0}
        for result in self.results:
            counts[result.status] += 1
        return counts

    def asdict(self) -> dict:
        return {
            "ok": self.ok,
            "counts": self.counts(),
            "results": [r.asdict() for r in self.results],
        }

    def to_text(self) -> str:
        lines = []
        for r in self.results:
            lines.append(f"[{r.status:>7}] {r.check}: {r.subject}")
            if r.status in ("fail", "finding"):
                lines.append(f"          expected: {r.expected}")
                lines.append(f"          actual:   {r.actual}")
            elif r.status == "skip":
                lines.append(f"          {r.actual}")

        counts = self.counts()
        lines.append(", ".join(f"{count} {status}" for status, count in counts.items()))
        return "\n".join(lines)


def available_checks() -> t.Dict[str, t.Type[_checks._CheckABC]]:
    """Check classes by name, sorted by name."""
    checks = {
        cls.NAME: cls
        for cls in vars(_checks).values()
        if isinstance(cls, type) and issubclass(cls, _checks._CheckABC) and cls != _checks._CheckABC
    }
    return dict(sorted(checks.items()))


def verify(
    corpus: t.Optional[Corpus] = None, only: t.Optional[t.Union[str, t.Iterable[str]]] = None
) -> VerificationReport:
    """Run verification checks on a corpus.

    Parameters
    ----------
    corpus: pertalex.corpus.Corpus, optional
        Knots and families to check. Default is the corpus shipped with pertalex.
    only: str or list of str, optional
        Names of the checks to run. Default runs every check.

    Returns
    -------
    report: VerificationReport
        Results of the selected checks, ordered by check name.

    Raises
    ------
    ValueError
        if a requested check does not exist.
    """
    if corpus is None:
        corpus = load_corpus()

    checks = available_checks()
    if only is None:
        selected = list(checks)
    else:
        selected = [only] if isinstance(only, str) else list(only)
        unknown = [name for name in selected if name not in checks]
        if unknown:
            raise ValueError(f"unknown checks {unknown}. Supported checks: {sorted(checks)}")

    results: t.List[CheckResult] = []
    for name in sorted(set(selected)):
        logger.info("running check %s", name)
        check_results = checks[name]().run(corpus)
        for result in check_results:
            if result.finding and not result.passed:
                logger.warning("%s: finding on %s: %s", name, result.subject, result.actual)
        results.extend(check_results)

    return VerificationReport(tuple(results))
