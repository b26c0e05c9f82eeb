# Copyright The pertalex contributors
# SPDX-License-Identifier: Apache-2.0

import typing as t

from ..corpus import Corpus
from ..twisting import alexander_limit
from ._check_abc import CheckResult, _CheckABC


class _CheckAlexanderLimit(_CheckABC):

    NAME = "alexander-limit"
    DESCRIPTION = "limit of the normalized Alexander polynomials of a family"

    def run(self, corpus: Corpus) -> t.List[CheckResult]:
        return [
            self.compare(entry.name, entry.alexander_limit, alexander_limit(entry.family))
            for entry in corpus.families
            if entry.alexander_limit is not None
        ]
