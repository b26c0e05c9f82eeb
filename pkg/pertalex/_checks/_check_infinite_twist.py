# Copyright The pertalex contributors
# SPDX-License-Identifier: Apache-2.0

import typing as t

from ..braid import full_twist_limit, full_twist_power
from ..corpus import Corpus
from ._check_abc import CheckResult, _CheckABC


class _CheckInfiniteTwist(_CheckABC):

    NAME = "infinite-twist"
    DESCRIPTION = "the infinite twist absorbs full twists from either side"

    STRANDS = (2, 3, 4, 5)

    def run(self, corpus: Corpus) -> t.List[CheckResult]:
        results = []
        for n in self.STRANDS:
            limit = full_twist_limit(n)
            twist = full_twist_power(n, 1)
            left = twist @ limit == limit
            both = limit @ twist @ limit == limit
            results.append(CheckResult(self.NAME, f"twist then limit, n={n}", left))
            results.append(CheckResult(self.NAME, f"limit, twist, limit, n={n}", both))
        return results
