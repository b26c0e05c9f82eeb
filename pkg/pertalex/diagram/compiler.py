# Copyright The pertalex contributors
# SPDX-License-Identifier: Apache-2.0
"""Compile the closure of a braid, possibly with infinite twist vertices, to a long diagram.

The braid is drawn upward. Every strand except the one at the cut position is closed by an arc
routed around the braid: arcs of positions left of the cut turn once counterclockwise, arcs right
of it once clockwise. The cut strand is opened into the long knot's two loose ends and does not
turn. Strands are labeled in the order they are met walking along the knot from the bottom of the
cut position.
"""

import itertools
import logging
import typing as t
from dataclasses import dataclass

from .. import exceptions
from ..braid import BraidWord
from .crossing import Crossing
from .upright_diagram import UprightDiagram

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class VertexBlock:
    """Placeholder for an infinite twist vertex on positions start .. start + width - 1."""

    start: int
    width: int

    @property
    def positions(self) -> range:
        return range(self.start, self.start + self.width)


Block = t.Union[int, VertexBlock]


@dataclass(frozen=True)
class PlacedVertex:
    """An infinite twist vertex in a compiled closure.

    Parameters
    ----------
    inputs: tuple of int
        Labels of the incoming strands, ordered by position from left to right.
    outputs: tuple of int
        Labels of the outgoing strands, ordered by position from left to right.
    block: int
        Index of the block the vertex was compiled from.
    """

    inputs: t.Tuple[int, ...]
    outputs: t.Tuple[int, ...]
    block: int


@dataclass(frozen=True)
class ClosureLayout:
    """Result of compiling a braid closure.

    Parameters
    ----------
    strand_count: int
        Number of strand labels.
    positions: int
        Number of braid positions.
    crossings: tuple of pertalex.diagram.Crossing
        One crossing per braid letter, in block order.
    crossing_blocks: tuple of int
        Block index of every crossing.
    vertices: tuple of PlacedVertex
        Infinite twist vertices in block order.
    rotations: tuple of (int, int)
        Nonzero turning numbers.
    entry: int
        Label of the incoming end.
    exit: int
        Label of the outgoing end.
    levels: tuple of tuple of int
        ``levels[b]`` holds the label at every position below block b; the last entry holds the
        labels at the top of the braid.
    """

    strand_count: int
    positions: int
    crossings: t.Tuple[Crossing, ...]
    crossing_blocks: t.Tuple[int, ...]
    vertices: t.Tuple[PlacedVertex, ...]
    rotations: t.Tuple[t.Tuple[int, int], ...]
    entry: int
    exit: int
    levels: t.Tuple[t.Tuple[int, ...], ...]

    @property
    def diagram(self) -> UprightDiagram:
        """The compiled diagram.

        Raises
        ------
        ValueError
            if the layout contains infinite twist vertices, which are not crossings.
        """
        if self.vertices:
            raise ValueError("a layout with infinite twist vertices is a chain, not a diagram")
        return UprightDiagram(
            strand_count=self.strand_count,
            crossings=self.crossings,
            rotations=self.rotations,
            entry=self.entry,
            exit=self.exit,
        )

    def crossings_in_blocks(self, blocks: t.Iterable[int]) -> t.List[Crossing]:
        wanted = set(blocks)
        return [c for c, b in zip(self.crossings, self.crossing_blocks) if b in wanted]


def compile_closure(positions: int, blocks: t.Sequence[Block], cut: int = 1) -> ClosureLayout:
    """Compile the closure of a sequence of braid letters and vertex placeholders.

    Parameters
    ----------
    positions: int
        Number of braid strands.
    blocks: list of int or VertexBlock
        Signed generator indices and vertex placeholders, bottom to top. A vertex passes the
        strand at each position straight up to the same position.
    cut: int, optional
        Position (1-based) of the strand opened into the long knot. Default is 1.

    Returns
    -------
    layout: ClosureLayout
        The compiled closure.

    Raises
    ------
    pertalex.exceptions.InvalidBraidError
        if a block does not fit the positions or the cut is out of range.
    pertalex.exceptions.NotAKnotError
        if the closure has more than one component.
    """
    if not 1 <= cut <= positions:
        raise exceptions.InvalidBraidError(f"cut {cut} is not a position in 1..{positions}")

    segment_ids = itertools.count()
    bottom = [next(segment_ids) for _ in range(positions)]
    current = list(bottom)
    continuation: t.Dict[int, int] = {}
    raw_crossings = []
    raw_vertices = []
    raw_levels = [tuple(current)]

    for index, block in enumerate(blocks):
        if isinstance(block, VertexBlock):
            if block.width < 1 or block.start < 1 or block.start + block.width - 1 > positions:
                raise exceptions.InvalidBraidError(
                    f"vertex on positions {block.start}..{block.start + block.width - 1} does "
                    + f"not fit {positions} strands"
                )
            inputs, outputs = [], []
            for position in block.positions:
                incoming, outgoing = current[position - 1], next(segment_ids)
                continuation[incoming] = outgoing
                current[position - 1] = outgoing
                inputs.append(incoming)
                outputs.append(outgoing)
            raw_vertices.append((tuple(inputs), tuple(outputs), index))
        else:
            letter = int(block)
            if letter == 0 or abs(letter) >= positions:
                raise exceptions.InvalidBraidError(
                    f"letter {letter} is not a generator on {positions} strands"
                )
            left = abs(letter) - 1
            left_in, right_in = current[left], current[left + 1]
            left_out, right_out = next(segment_ids), next(segment_ids)

            if letter > 0:
                # The over strand moves from left to right.
                sign, over_in, under_in, over_out, under_out = (
                    1,
                    left_in,
                    right_in,
                    right_out,
                    left_out,
                )
            else:
                sign, over_in, under_in, over_out, under_out = (
                    -1,
                    right_in,
                    left_in,
                    left_out,
                    right_out,
                )

            continuation[over_in] = over_out
            continuation[under_in] = under_out
            current[left], current[left + 1] = left_out, right_out
            raw_crossings.append((sign, over_in, under_in, over_out, under_out, index))
        raw_levels.append(tuple(current))

    top = current
    closing = {top[p]: bottom[p] for p in range(positions) if p != cut - 1}

    labels: t.Dict[int, int] = {}
    segment = bottom[cut - 1]
    label = 1
    while True:
        if segment in labels:
            raise exceptions.NotAKnotError("the braid closure has a closed component")
        labels[segment] = label
        if segment in closing:
            segment = closing[segment]
            if segment in labels:
                raise exceptions.NotAKnotError("the braid closure has a closed component")
            labels[segment] = label
        if segment not in continuation:
            break
        segment = continuation[segment]
        label += 1

    if segment != top[cut - 1]:
        raise exceptions.NotAKnotError("the walk along the closure does not end at the cut")
    expected = set(bottom) | set(continuation.values())
    if set(labels) != expected:
        raise exceptions.NotAKnotError(
            f"the closure of the braid on {positions} strands has several components"
        )

    rotations = []
    for p in range(positions):
        if p != cut - 1:
            rotations.append((labels[bottom[p]], 1 if p < cut - 1 else -1))

    logger.debug("compiled a closure with %d strands and %d blocks", label, len(blocks))
    return ClosureLayout(
        strand_count=label,
        positions=positions,
        crossings=tuple(
            Crossing(sign, labels[i], labels[j], labels[ip], labels[jp])
            for sign, i, j, ip, jp, _ in raw_crossings
        ),
        crossing_blocks=tuple(entry[-1] for entry in raw_crossings),
        vertices=tuple(
            PlacedVertex(tuple(labels[s] for s in ins), tuple(labels[s] for s in outs), index)
            for ins, outs, index in raw_vertices
        ),
        rotations=tuple(sorted(rotations)),
        entry=1,
        exit=label,
        levels=tuple(tuple(labels[s] for s in level) for level in raw_levels),
    )


def braid_closure_layout(w: BraidWord, cut: int = 1) -> ClosureLayout:
    """Compile the closure of a braid word, keeping the per-level label table."""
    return compile_closure(w.strand_count, w.letters, cut)


def braid_closure_to_long(w: BraidWord, cut: int = 1) -> UprightDiagram:
    """Long knot diagram of the closure of w, opened at the given position.

    Parameters
    ----------
    w: pertalex.braid.BraidWord
        A braid whose closure is a knot.
    cut: int, optional
        Position (1-based) of the strand opened into the long knot. Default is 1.

    Returns
    -------
    diagram: pertalex.diagram.UprightDiagram
        Diagram with one crossing per letter, 2 * len(w) + 1 strands and writhe equal to the
        exponent sum of w.

    Raises
    ------
    pertalex.exceptions.NotAKnotError
        if the closure of w is a link.
    """
    return braid_closure_layout(w, cut).diagram
