# Copyright The pertalex contributors
# SPDX-License-Identifier: Apache-2.0

import typing as t
from dataclasses import dataclass, field

import networkx as nx

from .. import exceptions
from ..diagram import UprightDiagram, crossing_weights, validate_diagram
from ..ring import LaurentPoly, RatFun, RatMatrix

State = t.Hashable
Edge = t.Tuple[State, State]

_ZERO = RatFun(LaurentPoly())


@dataclass(frozen=True)
class TangleChain:
    """A Markov chain with formal transition weights in Z(T).

    Parameters
    ----------
    states: tuple
        Ordered state labels. The order fixes the row and column order of ``matrix()``.
    transitions: dict
        Maps ``(source, target)`` to a nonzero RatFun weight. LaurentPoly and int weights are
        converted and zero weights dropped.
    incoming: tuple, optional
        States where walks enter the chain. Default is ().
    outgoing: tuple, optional
        States where walks leave the chain. Default is ().

    Raises
    ------
    ValueError
        if a transition or boundary state refers to an unknown state.
    """

    states: t.Tuple[State, ...]
    transitions: t.Dict[Edge, RatFun] = field(default_factory=dict)
    incoming: t.Tuple[State, ...] = ()
    outgoing: t.Tuple[State, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "states", tuple(self.states))
        object.__setattr__(self, "incoming", tuple(self.incoming))
        object.__setattr__(self, "outgoing", tuple(self.outgoing))

        known = set(self.states)
        if len(known) != len(self.states):
            raise ValueError("chain states must be distinct")

        cleaned = {}
        for (source, target), weight in self.transitions.items():
            if source not in known or target not in known:
                raise ValueError(f"transition {source} -> {target} leaves the state set")
            weight = weight if isinstance(weight, RatFun) else RatFun(weight)
            if weight:
                cleaned[(source, target)] = weight
        object.__setattr__(self, "transitions", cleaned)

        for state in self.incoming + self.outgoing:
            if state not in known:
                raise ValueError(f"boundary state {state} is not a state of the chain")

    @classmethod
    def from_diagram(cls, d: UprightDiagram) -> "TangleChain":
        """The random walk on the strands of a diagram, entering at its entry strand.

        Raises
        ------
        pertalex.exceptions.InvalidDiagramError
            if the diagram is not valid.
        """
        validate_diagram(d)

        transitions: t.Dict[Edge, RatFun] = {}
        for c in d.crossings:
            for source, target, weight in crossing_weights(c):
                edge = (source, target)
                transitions[edge] = transitions.get(edge, _ZERO) + weight
        return cls(
            states=tuple(range(1, d.strand_count + 1)),
            transitions=transitions,
            incoming=(d.entry,),
            outgoing=(d.exit,),
        )

    @classmethod
    def fromdict(cls, data_dict: dict) -> "TangleChain":
        """Generate a chain from ``{"states", "incoming", "outgoing", "matrix"}``."""
        states = tuple(data_dict["states"])
        matrix = RatMatrix.fromdict(data_dict["matrix"])
        if matrix.shape != (len(states), len(states)):
            raise exceptions.ShapeError("the transition matrix does not match the state count")

        transitions = {
            (source, target): matrix[r, c]
            for r, source in enumerate(states)
            for c, target in enumerate(states)
            if matrix[r, c]
        }
        return cls(
            states=states,
            transitions=transitions,
            incoming=tuple(data_dict.get("incoming", [])),
            outgoing=tuple(data_dict.get("outgoing", [])),
        )

    def asdict(self) -> dict:
        """Export self as ordered states plus the dense transition matrix."""
        return {
            "states": list(self.states),
            "incoming": list(self.incoming),
            "outgoing": list(self.outgoing),
            "matrix": self.matrix().asdict(),
        }

    def __len__(self) -> int:
        return len(self.states)

    def index(self, state: State) -> int:
        """Row/column index of a state in ``matrix()``."""
        return self.states.index(state)

    def weight(self, source: State, target: State) -> RatFun:
        return self.transitions.get((source, target), _ZERO)

    def matrix(self) -> RatMatrix:
        """Dense transition matrix in state order."""
        position = {s: k for k, s in enumerate(self.states)}
        size = len(self.states)
        entries = [_ZERO] * (size * size)
        for (source, target), weight in self.transitions.items():
            entries[position[source] * size + position[target]] = weight
        return RatMatrix(size, size, tuple(entries))

    def support_graph(self) -> nx.DiGraph:
        """Directed graph of the nonzero transitions, weights stored as edge attribute."""
        graph = nx.DiGraph()
        graph.add_nodes_from(self.states)
        for (source, target), weight in self.transitions.items():
            graph.add_edge(source, target, weight=weight)
        return graph

    def restricted(self, states: t.Iterable[State]) -> "TangleChain":
        """The chain induced on a subset of states, keeping the given order of self."""
        keep = set(states)
        return TangleChain(
            states=tuple(s for s in self.states if s in keep),
            transitions={
                (a, b): w for (a, b), w in self.transitions.items() if a in keep and b in keep
            },
            incoming=tuple(s for s in self.incoming if s in keep),
            outgoing=tuple(s for s in self.outgoing if s in keep),
        )

    def relabeled(self, mapping: t.Mapping[State, State]) -> "TangleChain":
        return TangleChain(
            states=tuple(mapping[s] for s in self.states),
            transitions={(mapping[a], mapping[b]): w for (a, b), w in self.transitions.items()},
            incoming=tuple(mapping[s] for s in self.incoming),
            outgoing=tuple(mapping[s] for s in self.outgoing),
        )

    def with_transitions(self, transitions: t.Mapping[Edge, RatFun]) -> "TangleChain":
        """Add the given weights to the transitions of self."""
        merged = dict(self.transitions)
        for edge, weight in transitions.items():
            merged[edge] = merged.get(edge, _ZERO) + weight
        return TangleChain(self.states, merged, self.incoming, self.outgoing)
