# Copyright The pertalex contributors
# SPDX-License-Identifier: Apache-2.0

import typing as t

from ..corpus import Corpus
from ..invariants import compute_invariants, positivity_report
from ._check_abc import CheckResult, _CheckABC

SHAPE = "rho_1 symmetric, divisible by (1 - T)^2"


class _CheckConjectures(_CheckABC):
    """rho_1 is symmetric and divisible by (1 - T)^2, delta_1 of a positive knot is <= 0.

    Violations are findings.
    """

    NAME = "conjectures"
    DESCRIPTION = "symmetry and divisibility of rho_1, sign of delta_1 for positive knots"

    def run(self, corpus: Corpus) -> t.List[CheckResult]:
        results = []
        for knot in corpus.chiral_knots():
            d = knot.presentations[0].first_diagram()
            invariants = compute_invariants(d, knot.name)
            report = positivity_report(d, knot.positive, invariants)

            expected = "delta_1 <= 0" if knot.positive else SHAPE
            actual = "; ".join(report.findings) or f"delta_1 = {_render(report.delta1)}"
            results.append(
                CheckResult(
                    check=self.NAME,
                    subject=knot.name,
                    passed=report.consistent,
                    expected=expected,
                    actual=actual,
                    finding=not report.consistent,
                )
            )
        return results


def _render(polynomial) -> str:
    return "none" if polynomial is None else polynomial.to_str("z")
