# Copyright The pertalex contributors
# SPDX-License-Identifier: Apache-2.0

import typing as t

import networkx as nx

from ..corpus import Corpus
from ..diagram import UprightDiagram
from ..markov import TangleChain, greens_matrix, walk_sum_oracle
from ._check_abc import CheckResult, _CheckABC


class _CheckWalkOracle(_CheckABC):

    NAME = "walk-oracle"
    DESCRIPTION = "truncated walk sums near T = 1 approach the Green's entries"

    MAX_CROSSINGS = 5
    AT = 0.99
    MAX_LEN = 200
    TOLERANCE = 1e-6

    def run(self, corpus: Corpus) -> t.List[CheckResult]:
        results = []
        for knot in corpus.knots:
            for presentation in knot.presentations:
                label, d = presentation.diagrams()[0]
                if len(d.crossings) > self.MAX_CROSSINGS:
                    continue

                chain = TangleChain.from_diagram(d)
                greens = greens_matrix(chain)
                for source, target in self._entries(chain, d):
                    exact = greens[chain.index(source), chain.index(target)].evaluate(self.AT)
                    approximate = walk_sum_oracle(chain, source, target, self.MAX_LEN, self.AT)
                    results.append(
                        CheckResult(
                            check=self.NAME,
                            subject=f"{knot.name}, {label}: walks {source} -> {target}",
                            passed=abs(float(exact) - approximate) < self.TOLERANCE,
                            expected=f"{float(exact):.9f}",
                            actual=f"{approximate:.9f}",
                        )
                    )
        return results

    def _entries(self, chain: TangleChain, d: UprightDiagram) -> t.List[t.Tuple[int, int]]:
        """Entry to exit, turning strands on a cycle, and neighbours within each cycle class."""
        entries = [(chain.incoming[0], chain.outgoing[0])]
        components = [
            sorted(c) for c in nx.strongly_connected_components(chain.support_graph()) if len(c) > 1
        ]
        on_cycle = {s for c in components for s in c}

        entries.extend((label, label) for label, _ in d.rotations if label in on_cycle)
        for component in sorted(components):
            entries.extend(zip(component, component[1:] + component[:1]))
        return entries
