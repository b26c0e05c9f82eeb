# Copyright The pertalex contributors
# SPDX-License-Identifier: Apache-2.0

import typing as t

from .. import exceptions
from ..corpus import Corpus
from ..markov import TangleChain, cartier_foata_check
from ._check_abc import CheckResult, _CheckABC


class _CheckCartierFoata(_CheckABC):

    NAME = "cartier-foata"
    DESCRIPTION = "signed sum over simple multicycles equals det(I - A)"

    MAX_CROSSINGS = 8

    def run(self, corpus: Corpus) -> t.List[CheckResult]:
        results = []
        for knot in corpus.chiral_knots():
            if knot.crossing_count > self.MAX_CROSSINGS:
                continue
            for presentation in knot.presentations:
                label, d = presentation.diagrams()[0]
                subject = f"{knot.name}, {label}"
                try:
                    total, determinant = cartier_foata_check(TangleChain.from_diagram(d))
                except exceptions.EnumerationGuardError as e:
                    results.append(self.skip(subject, str(e)))
                    continue
                results.append(self.compare(subject, determinant, total))
        return results
