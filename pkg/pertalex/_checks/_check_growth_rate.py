# Copyright The pertalex contributors
# SPDX-License-Identifier: Apache-2.0

import typing as t

from ..corpus import Corpus
from ..twisting import growth_rate
from ._check_abc import CheckResult, _CheckABC


class _CheckGrowthRate(_CheckABC):

    NAME = "growth-rate"
    DESCRIPTION = "limit of the rho_1 differences of a family"

    def run(self, corpus: Corpus) -> t.List[CheckResult]:
        return [
            self.compare(entry.name, entry.growth_rate, growth_rate(entry.family))
            for entry in corpus.families
            if entry.growth_rate is not None
        ]
