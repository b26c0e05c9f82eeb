# Copyright The pertalex contributors
# SPDX-License-Identifier: Apache-2.0

import typing as t

from ..corpus import Corpus
from ..markov import TangleChain, bad_multicycle_sum
from ..ring import RatFun, T
from ._check_abc import CheckResult, _CheckABC


def tiny_chains() -> t.List[t.Tuple[str, TangleChain, t.Set[int]]]:
    """Chains whose cycles meet in a small acyclic region, with that region."""
    two_petals = TangleChain(
        states=(1, 2, 3),
        transitions={(1, 2): T, (2, 1): 2, (1, 3): T**2, (3, 1): 3},
    )
    three_petals = TangleChain(
        states=(1, 2, 3, 4),
        transitions={(1, 2): T, (2, 1): 2, (1, 3): T**2, (3, 1): 3, (1, 4): 5, (4, 1): T + 1},
    )
    shared_path = TangleChain(
        states=(1, 2, 3, 4),
        transitions={(1, 2): T, (2, 3): 2, (3, 1): 1 - T, (2, 4): T**2, (4, 1): 3},
    )
    return [
        ("two petals", two_petals, {1}),
        ("three petals", three_petals, {1}),
        ("shared path", shared_path, {1, 2}),
    ]


class _CheckBadMulticycles(_CheckABC):

    NAME = "bad-multicycles"
    DESCRIPTION = "multicycles repeating a region state cancel in pairs"

    def run(self, corpus: Corpus) -> t.List[CheckResult]:
        return [
            self.compare(name, RatFun(0), bad_multicycle_sum(chain, region))
            for name, chain, region in tiny_chains()
        ]
