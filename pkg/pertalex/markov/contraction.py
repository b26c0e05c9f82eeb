# Copyright The pertalex contributors
# SPDX-License-Identifier: Apache-2.0
"""Contraction of a chain by a subregion.

A region U is a set of states with designated inputs I and outputs O. Walks enter U only through
I and leave only from O, so the region can be replaced by direct transitions from I to O weighted
with the Green's function of the walks that stay inside U. Contraction keeps the Green's function
between the surviving states and, when U admits no cycles, also ``det(I - A)``.
"""

import logging
import typing as t

import networkx as nx

from .. import exceptions
from ..diagram import ClosureLayout
from ..ring import RatFun
from .greens import greens_matrix, walk_determinant
from .tangle_chain import State, TangleChain

logger = logging.getLogger(__name__)


def contract(
    m: TangleChain,
    region: t.Iterable[State],
    inputs: t.Sequence[State],
    outputs: t.Sequence[State],
) -> TangleChain:
    """Contract a chain by a region.

    Parameters
    ----------
    m: pertalex.markov.TangleChain
        The chain.
    region: iterable of states
        The region U, inputs and outputs included.
    inputs: sequence of states
        States of U where walks enter.
    outputs: sequence of states
        States of U where walks leave.

    Returns
    -------
    contracted: pertalex.markov.TangleChain
        Chain on the states outside the interior of U. Transitions out of the inputs are the
        Green's function of U restricted to its own states; every other transition is kept.

    Raises
    ------
    pertalex.exceptions.RegionError
        if the region leaks, i.e. walks can enter it elsewhere than at an input or leave it
        elsewhere than from an output, or an input is also an output.
    """
    region_set, interior = _check_region(m, region, inputs, outputs)
    input_set, output_set = set(inputs), set(outputs)

    local = TangleChain(
        states=tuple(s for s in m.states if s in region_set),
        transitions={
            (a, b): w
            for (a, b), w in m.transitions.items()
            if a in region_set and b in region_set and a not in output_set
        },
    )
    local_greens = greens_matrix(local) if inputs and outputs else None

    transitions: t.Dict[t.Tuple[State, State], RatFun] = {
        (a, b): w
        for (a, b), w in m.transitions.items()
        if a not in interior and a not in input_set
    }
    for source in inputs:
        for target in outputs:
            weight = local_greens[local.index(source), local.index(target)]
            if weight:
                transitions[(source, target)] = weight

    logger.debug(
        "contracted %d interior states between %d inputs and %d outputs",
        len(interior),
        len(inputs),
        len(outputs),
    )
    return TangleChain(
        states=tuple(s for s in m.states if s not in interior),
        transitions=transitions,
        incoming=m.incoming,
        outgoing=m.outgoing,
    )


def region_has_cycles(
    m: TangleChain, region: t.Iterable[State], outputs: t.Iterable[State] = ()
) -> bool:
    """True if the nonzero transitions inside the region contain a cycle.

    Transitions out of the outputs belong to the rest of the chain and are ignored.
    """
    region, outputs = set(region), set(outputs)
    graph = nx.DiGraph()
    graph.add_nodes_from(region)
    graph.add_edges_from(
        (a, b) for a, b in m.transitions if a in region and b in region and a not in outputs
    )
    return not nx.is_directed_acyclic_graph(graph)


def det_after_contract(
    m: TangleChain,
    region: t.Iterable[State],
    inputs: t.Sequence[State],
    outputs: t.Sequence[State],
) -> t.Tuple[RatFun, RatFun]:
    """Return ``det(I - A)`` before and after contracting an acyclic region.

    Raises
    ------
    pertalex.exceptions.RegionCycleError
        if the region admits a cycle, in which case the determinant need not be preserved.
    pertalex.exceptions.RegionError
        if the region leaks.
    """
    region = set(region)
    if region_has_cycles(m, region, outputs):
        raise exceptions.RegionCycleError(
            "the region admits a cycle, contraction may change det(I - A)"
        )
    return walk_determinant(m), walk_determinant(contract(m, region, inputs, outputs))


def braid_region(
    layout: ClosureLayout, first: int, last: int
) -> t.Tuple[t.Set[int], t.Tuple[int, ...], t.Tuple[int, ...]]:
    """Region covering the blocks first .. last (inclusive) of a compiled closure.

    Only positions changed by some block of the run take part. Inputs and outputs are ordered by
    position from left to right.

    Raises
    ------
    pertalex.exceptions.RegionError
        if the block range is empty or out of range.
    """
    if not 0 <= first <= last < len(layout.levels) - 1:
        raise exceptions.RegionError(
            f"blocks {first}..{last} are not a run of the {len(layout.levels) - 1} blocks"
        )

    levels = layout.levels[first : last + 2]
    touched = [
        p
        for p in range(layout.positions)
        if any(below[p] != above[p] for below, above in zip(levels, levels[1:]))
    ]
    region = {level[p] for level in levels for p in touched}
    return region, tuple(levels[0][p] for p in touched), tuple(levels[-1][p] for p in touched)


def _check_region(
    m: TangleChain,
    region: t.Iterable[State],
    inputs: t.Sequence[State],
    outputs: t.Sequence[State],
) -> t.Tuple[t.Set[State], t.Set[State]]:
    region_set = set(region)
    input_set, output_set = set(inputs), set(outputs)

    unknown = region_set - set(m.states)
    if unknown:
        raise exceptions.RegionError(f"states {sorted(unknown, key=str)} are not in the chain")
    if not (input_set | output_set) <= region_set:
        raise exceptions.RegionError("inputs and outputs must belong to the region")
    if input_set & output_set:
        raise exceptions.RegionError(
            f"states {sorted(input_set & output_set, key=str)} are both input and output"
        )

    interior = region_set - input_set - output_set
    boundary = set(m.incoming) | set(m.outgoing)
    if interior & boundary:
        raise exceptions.RegionError("the region swallows an incoming or outgoing state")

    for a, b in m.transitions:
        inside_a, inside_b = a in region_set, b in region_set
        if inside_a and not inside_b and a not in output_set:
            raise exceptions.RegionError(f"transition {a} -> {b} leaves the region")
        if inside_b and not inside_a and b not in input_set:
            raise exceptions.RegionError(f"transition {a} -> {b} enters the region")
        if inside_a and inside_b and (a in output_set) != (b in input_set):
            raise exceptions.RegionError(f"transition {a} -> {b} runs back inside the region")
    return region_set, interior
