# Copyright The pertalex contributors
# SPDX-License-Identifier: Apache-2.0

import typing as t

from ..corpus import Corpus
from ..invariants import rho1, rho1_rational
from ._check_abc import CheckResult, _CheckABC


class _CheckRationalRoute(_CheckABC):

    NAME = "rational-route"
    DESCRIPTION = "rho_1 over Z(T) agrees with the adjugate route"

    MAX_CROSSINGS = 7

    def run(self, corpus: Corpus) -> t.List[CheckResult]:
        results = []
        for knot in corpus.chiral_knots():
            if knot.crossing_count > self.MAX_CROSSINGS:
                continue
            d = knot.presentations[0].first_diagram()
            results.append(self.compare(knot.name, rho1(d), rho1_rational(d)))
        return results
