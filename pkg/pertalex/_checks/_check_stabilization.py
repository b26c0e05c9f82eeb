# Copyright The pertalex contributors
# SPDX-License-Identifier: Apache-2.0

import typing as t

from ..corpus import Corpus
from ..twisting import convergence_report
from ._check_abc import CheckResult, _CheckABC


class _CheckStabilization(_CheckABC):

    NAME = "stabilization"
    DESCRIPTION = "d_t agrees with the growth rate through r0 from some t on"

    def run(self, corpus: Corpus) -> t.List[CheckResult]:
        results = []
        for entry in corpus.families:
            if entry.stabilization is None:
                continue
            t_max, r0 = entry.stabilization
            depths = convergence_report(entry.family, t_max, r0).depths

            reached = r0 in depths and all(d == r0 for d in depths[depths.index(r0) :])
            results.append(
                CheckResult(
                    check=self.NAME,
                    subject=f"{entry.name}, t <= {t_max}",
                    passed=reached,
                    expected=f"agreement through T^{r0} from some t on",
                    actual=f"depths {list(depths)}",
                )
            )
        return results
