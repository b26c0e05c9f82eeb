# Copyright The pertalex contributors
# SPDX-License-Identifier: Apache-2.0

import typing as t

from ..braid import burau, full_twist_power, full_twist_word, p_nk
from ..corpus import Corpus
from ..ring import T
from ._check_abc import CheckResult, _CheckABC


class _CheckBurauClosedForms(_CheckABC):

    NAME = "burau-closed-forms"
    DESCRIPTION = "closed form of full twist powers and the recurrence of p_nk"

    STRANDS = (2, 3, 4)
    POWERS = (1, 2, 3)

    def run(self, corpus: Corpus) -> t.List[CheckResult]:
        results = []
        for n in self.STRANDS:
            for k in self.POWERS:
                product = burau(full_twist_word(n) * k)
                results.append(
                    CheckResult(
                        check=self.NAME,
                        subject=f"full twist power n={n}, k={k}",
                        passed=full_twist_power(n, k) == product,
                    )
                )
                results.append(
                    self.compare(
                        f"p_nk recurrence n={n}, k={k}",
                        1 - T + T**n * p_nk(n, k),
                        p_nk(n, k + 1),
                    )
                )
        return results
