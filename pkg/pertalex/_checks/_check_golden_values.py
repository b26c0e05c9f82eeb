# Copyright The pertalex contributors
# SPDX-License-Identifier: Apache-2.0

import typing as t

from ..corpus import Corpus
from ..invariants import alexander, rho1
from ._check_abc import CheckResult, _CheckABC


class _CheckGoldenValues(_CheckABC):

    NAME = "golden-values"
    DESCRIPTION = "Alexander polynomial and rho_1 of every presentation equal the stored values"

    def run(self, corpus: Corpus) -> t.List[CheckResult]:
        results = []
        for knot in corpus.chiral_knots():
            for presentation in knot.presentations:
                for label, d in presentation.diagrams():
                    subject = f"{knot.name}, {label}"
                    if knot.alexander is not None:
                        results.append(
                            self.compare(f"{subject}: alexander", knot.alexander, alexander(d))
                        )
                    if knot.rho1 is not None:
                        results.append(self.compare(f"{subject}: rho1", knot.rho1, rho1(d)))
        return results
