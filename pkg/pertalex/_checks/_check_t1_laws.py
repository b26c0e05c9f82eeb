# Copyright The pertalex contributors
# SPDX-License-Identifier: Apache-2.0

import typing as t
from fractions import Fraction

from ..corpus import Corpus
from ..twisting import alexander_limit, growth_rate
from ._check_abc import CheckResult, _CheckABC


class _CheckT1Laws(_CheckABC):

    NAME = "t1-laws"
    DESCRIPTION = "|limit(1)| = 1/n and |growth rate(1)| = (n-1)/(2n)"

    def run(self, corpus: Corpus) -> t.List[CheckResult]:
        results = []
        for entry in corpus.families:
            n = entry.family.width
            results.append(
                self.compare(
                    f"{entry.name}: |alexander limit at T = 1|",
                    Fraction(1, n),
                    abs(alexander_limit(entry.family).evaluate(1)),
                )
            )
            results.append(
                self.compare(
                    f"{entry.name}: |growth rate at T = 1|",
                    Fraction(n - 1, 2 * n),
                    abs(growth_rate(entry.family).evaluate(1)),
                )
            )
        return results
