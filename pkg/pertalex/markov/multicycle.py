# Copyright The pertalex contributors
# SPDX-License-Identifier: Apache-2.0
"""Exhaustive multicycle enumeration, used as an oracle for determinant identities.

A cycle is a closed walk up to rotation. A multicycle is a finite set of cycles; it is simple if
no state is visited twice, counting all of its cycles together. The signed sum of the weights of
the simple multicycles of a chain equals ``det(I - A)``.
"""

import collections
import logging
import typing as t
from dataclasses import dataclass

import networkx as nx

from .. import exceptions
from ..ring import RatFun
from .contraction import region_has_cycles
from .greens import walk_determinant
from .tangle_chain import State, TangleChain

logger = logging.getLogger(__name__)

MAX_STATES = 16

Cycle = t.Tuple[State, ...]


@dataclass(frozen=True)
class Multicycle:
    """A finite set of cycles, each stored in its lexicographically least rotation.

    Parameters
    ----------
    cycles: tuple of tuple
        The cycles. They are brought to canonical rotation and sorted on construction.

    Raises
    ------
    ValueError
        if a cycle is empty.
    """

    cycles: t.Tuple[Cycle, ...] = ()

    def __post_init__(self):
        for cycle in self.cycles:
            if not cycle:
                raise ValueError("cycles must visit at least one state")
        object.__setattr__(
            self, "cycles", tuple(sorted((canonical_rotation(c) for c in self.cycles), key=_key))
        )

    def __len__(self) -> int:
        return len(self.cycles)

    def visits(self) -> t.Counter:
        """Number of visits to every state over all cycles."""
        return collections.Counter(s for cycle in self.cycles for s in cycle)

    def weight(self, m: TangleChain) -> RatFun:
        """Product of the transition weights along every cycle."""
        product = RatFun(1)
        for cycle in self.cycles:
            product = product * cycle_weight(m, cycle)
        return product

    def signed_weight(self, m: TangleChain) -> RatFun:
        weight = self.weight(m)
        return -weight if len(self.cycles) % 2 else weight


def canonical_rotation(cycle: t.Sequence[State]) -> Cycle:
    cycle = tuple(cycle)
    return min((cycle[k:] + cycle[:k] for k in range(len(cycle))), key=_key)


def cycle_weight(m: TangleChain, cycle: Cycle) -> RatFun:
    product = RatFun(1)
    for source, target in zip(cycle, cycle[1:] + cycle[:1]):
        product = product * m.weight(source, target)
    return product


def enumerate_simple_multicycles(
    m: TangleChain, max_states: int = MAX_STATES
) -> t.List[Multicycle]:
    """All simple multicycles of a chain, the empty one included.

    Raises
    ------
    pertalex.exceptions.EnumerationGuardError
        if the chain has more than max_states states.
    """
    _guard(m, max_states)

    cycles = sorted(
        (canonical_rotation(c) for c in nx.simple_cycles(m.support_graph())), key=_key
    )
    logger.debug("found %d simple cycles on %d states", len(cycles), len(m))

    found = []

    def extend(start: int, chosen: t.List[Cycle], used: t.Set[State]):
        found.append(Multicycle(tuple(chosen)))
        for k in range(start, len(cycles)):
            cycle = cycles[k]
            if used.isdisjoint(cycle):
                extend(k + 1, chosen + [cycle], used | set(cycle))

    extend(0, [], set())
    return found


def multicycle_sum(m: TangleChain, multicycles: t.Iterable[Multicycle]) -> RatFun:
    """Signed sum ``sum (-1)^|q| a(q)`` over the given multicycles."""
    total = RatFun(0)
    for q in multicycles:
        total = total + q.signed_weight(m)
    return total


def cartier_foata_check(m: TangleChain, max_states: int = MAX_STATES) -> t.Tuple[RatFun, RatFun]:
    """Return the signed simple multicycle sum and ``det(I - A)``, which must agree.

    Raises
    ------
    pertalex.exceptions.EnumerationGuardError
        if the chain has more than max_states states.
    """
    return multicycle_sum(m, enumerate_simple_multicycles(m, max_states)), walk_determinant(m)


def enumerate_region_cycles(
    m: TangleChain, region: t.Iterable[State], max_states: int = MAX_STATES
) -> t.List[Cycle]:
    """Cycles that may revisit states of an acyclic region but no other state.

    Raises
    ------
    pertalex.exceptions.RegionCycleError
        if the region admits a cycle, which would make the set infinite.
    pertalex.exceptions.EnumerationGuardError
        if the chain has more than max_states states.
    """
    _guard(m, max_states)
    region = set(region)
    if region_has_cycles(m, region):
        raise exceptions.RegionCycleError("the region admits a cycle")

    successors = collections.defaultdict(list)
    for source, target in m.transitions:
        successors[source].append(target)

    cycles = set()

    def walk(path: t.List[State], outside: t.Set[State]):
        for target in successors[path[-1]]:
            if target == path[0]:
                cycles.add(canonical_rotation(path))
                if target not in region:
                    continue
            if target in region:
                walk(path + [target], outside)
            elif target not in outside:
                walk(path + [target], outside | {target})

    for start in m.states:
        walk([start], set() if start in region else {start})
    return sorted(cycles, key=_key)


def bad_multicycle_sum(
    m: TangleChain, region: t.Iterable[State], max_states: int = MAX_STATES
) -> RatFun:
    """Signed sum over the multicycles whose repeated states all lie in an acyclic region.

    Only multicycles with at least one repeated state count. Pairing such multicycles by swapping
    the continuations at a repeated state makes the sum vanish.

    Raises
    ------
    pertalex.exceptions.RegionCycleError
        if the region admits a cycle.
    pertalex.exceptions.EnumerationGuardError
        if the chain has more than max_states states.
    """
    region = set(region)
    cycles = enumerate_region_cycles(m, region, max_states)
    outside_states = [frozenset(s for s in c if s not in region) for c in cycles]

    total = RatFun(0)
    count = 0

    def extend(start: int, chosen: t.List[Cycle], used: t.FrozenSet[State]):
        nonlocal total, count
        if chosen:
            q = Multicycle(tuple(chosen))
            if any(visits > 1 for visits in q.visits().values()):
                total = total + q.signed_weight(m)
                count += 1
        for k in range(start, len(cycles)):
            if used.isdisjoint(outside_states[k]):
                extend(k + 1, chosen + [cycles[k]], used | outside_states[k])

    extend(0, [], frozenset())
    logger.debug("summed %d multicycles with repeated states", count)
    return total


def _guard(m: TangleChain, max_states: int):
    if len(m) > max_states:
        raise exceptions.EnumerationGuardError(
            f"exhaustive enumeration is limited to {max_states} states, the chain has {len(m)}"
        )


def _key(cycle: Cycle) -> t.Tuple[str, ...]:
    return tuple(str(s).zfill(8) for s in cycle)
