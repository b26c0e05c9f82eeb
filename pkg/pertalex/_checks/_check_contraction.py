# Copyright The pertalex contributors
# SPDX-License-Identifier: Apache-2.0

import typing as t

from .. import exceptions
from ..corpus import Corpus
from ..diagram import ClosureLayout
from ..markov import (
    TangleChain,
    braid_region,
    chain_from_layout,
    contract,
    det_after_contract,
    greens_matrix,
)
from ..ring import RatMatrix
from ._check_abc import CheckResult, _CheckABC


class _CheckContraction(_CheckABC):

    NAME = "contraction"
    DESCRIPTION = "contracting a braid region keeps Green's entries and det(I - A)"

    MAX_CROSSINGS = 7
    MAX_RUN = 2

    def run(self, corpus: Corpus) -> t.List[CheckResult]:
        results = []
        for knot in corpus.knots:
            if knot.crossing_count > self.MAX_CROSSINGS:
                continue
            for presentation in knot.presentations:
                for layout in presentation.layouts()[:1]:
                    label = f"{knot.name}, braid [{presentation.braid}]"
                    results.extend(self._run_layout(label, layout))
        return results

    def _run_layout(self, label: str, layout: ClosureLayout) -> t.List[CheckResult]:
        chain = chain_from_layout(layout)
        greens = greens_matrix(chain)
        blocks = len(layout.levels) - 1

        results = []
        for first in range(blocks):
            for last in range(first, min(first + self.MAX_RUN, blocks)):
                subject = f"{label}, blocks {first}..{last}"
                results.extend(self._run_region(subject, chain, greens, layout, first, last))
        return results

    def _run_region(
        self,
        subject: str,
        chain: TangleChain,
        greens: RatMatrix,
        layout: ClosureLayout,
        first: int,
        last: int,
    ) -> t.List[CheckResult]:
        region, inputs, outputs = braid_region(layout, first, last)
        try:
            contracted = contract(chain, region, inputs, outputs)
        except exceptions.RegionError as e:
            return [self.skip(subject, str(e))]

        after = greens_matrix(contracted)
        kept = all(
            greens[chain.index(s), chain.index(u)]
            == after[contracted.index(s), contracted.index(u)]
            for s in contracted.states
            for u in contracted.states
        )
        results = [CheckResult(self.NAME, f"{subject}: green's entries", kept)]

        try:
            before, after_det = det_after_contract(chain, region, inputs, outputs)
        except exceptions.RegionCycleError as e:
            results.append(self.skip(f"{subject}: determinant", str(e)))
        else:
            results.append(self.compare(f"{subject}: determinant", before, after_det))
        return results
