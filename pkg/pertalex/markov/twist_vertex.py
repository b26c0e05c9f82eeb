# Copyright The pertalex contributors
# SPDX-License-Identifier: Apache-2.0

import typing as t

from ..braid import full_twist_limit
from ..diagram import ClosureLayout, crossing_weights
from .tangle_chain import TangleChain


def infinite_twist_vertex(n: int) -> TangleChain:
    """Chain fragment of an infinite twist vertex with n strands.

    Inputs are the states 1 .. n and outputs n + 1 .. 2n, both ordered by position. Input i moves
    to output j with weight ``T^(j-1) / (1 + T + ... + T^(n-1))`` whatever i is.

    Raises
    ------
    ValueError
        if n < 2.
    """
    limit = full_twist_limit(n)
    transitions = {
        (i + 1, n + j + 1): limit[i, j] for i in range(n) for j in range(n)
    }
    return TangleChain(
        states=tuple(range(1, 2 * n + 1)),
        transitions=transitions,
        incoming=tuple(range(1, n + 1)),
        outgoing=tuple(range(n + 1, 2 * n + 1)),
    )


def chain_from_layout(layout: ClosureLayout) -> TangleChain:
    """Chain of a compiled closure, crossings and infinite twist vertices spliced together."""
    transitions: t.Dict = {}
    for c in layout.crossings:
        for source, target, weight in crossing_weights(c):
            transitions[(source, target)] = transitions.get((source, target), 0) + weight

    fragments = {}
    for vertex in layout.vertices:
        width = len(vertex.inputs)
        if width not in fragments:
            fragments[width] = infinite_twist_vertex(width)
        mapping = dict(zip(range(1, 2 * width + 1), vertex.inputs + vertex.outputs))
        for edge, weight in fragments[width].relabeled(mapping).transitions.items():
            transitions[edge] = transitions.get(edge, 0) + weight

    return TangleChain(
        states=tuple(range(1, layout.strand_count + 1)),
        transitions=transitions,
        incoming=(layout.entry,),
        outgoing=(layout.exit,),
    )
