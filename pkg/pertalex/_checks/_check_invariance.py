# Copyright The pertalex contributors
# SPDX-License-Identifier: Apache-2.0

import typing as t

from ..corpus import Corpus
from ..invariants import alexander, rho1
from ._check_abc import CheckResult, _CheckABC


class _CheckInvariance(_CheckABC):

    NAME = "invariance"
    DESCRIPTION = "every presentation and cut of a knot gives the same invariants"

    def run(self, corpus: Corpus) -> t.List[CheckResult]:
        results = []
        for knot in corpus.knots:
            diagrams = [item for p in knot.presentations for item in p.diagrams()]
            if len(diagrams) < 2:
                continue

            reference_label, reference = diagrams[0]
            expected = (alexander(reference), rho1(reference))
            for label, d in diagrams[1:]:
                actual = (alexander(d), rho1(d))
                results.append(
                    CheckResult(
                        check=self.NAME,
                        subject=f"{knot.name}: {label} against {reference_label}",
                        passed=actual == expected,
                        expected=f"alexander {expected[0]}, rho1 {expected[1]}",
                        actual=f"alexander {actual[0]}, rho1 {actual[1]}",
                    )
                )
        return results
