# Copyright The pertalex contributors
# SPDX-License-Identifier: Apache-2.0

import typing as t
from dataclasses import dataclass

from .. import exceptions
from .crossing import Crossing


@dataclass(frozen=True)
class UprightDiagram:
    """An upright long knot diagram.

    Strands are the arcs between consecutive crossings and carry the labels 1 to strand_count.
    Walking along the knot from the entry strand, a strand entering a crossing as ``i`` (``j``)
    continues as ``ip`` (``jp``).

    Parameters
    ----------
    strand_count: int
        Number of strand labels, 2 * len(crossings) + 1 for a long knot.
    crossings: tuple of pertalex.diagram.Crossing, optional
        The crossings. Default is no crossings.
    rotations: tuple of (int, int), optional
        Pairs ``(label, turning number)`` for strands with nonzero turning number. A mapping is
        accepted and normalized. Default is all zero.
    entry: int, optional
        Label of the incoming open end. Default is 1.
    exit: int, optional
        Label of the outgoing open end. Default is strand_count.
    """

    strand_count: int
    crossings: t.Tuple[Crossing, ...] = ()
    rotations: t.Tuple[t.Tuple[int, int], ...] = ()
    entry: int = 1
    exit: t.Optional[int] = None

    def __post_init__(self):
        items = self.rotations.items() if isinstance(self.rotations, t.Mapping) else self.rotations
        object.__setattr__(
            self, "rotations", tuple(sorted((int(k), int(v)) for k, v in items if v != 0))
        )
        object.__setattr__(self, "crossings", tuple(self.crossings))
        if self.exit is None:
            object.__setattr__(self, "exit", self.strand_count)

    @classmethod
    def fromdict(cls, data_dict: dict) -> "UprightDiagram":
        """Generate a diagram from its JSON form.

        Parameters
        ----------
        data_dict: dict
            ``{"strands": N, "entry": a, "exit": b, "crossings": [{"sign", "i", "j", "ip",
            "jp"}, ...], "rotations": {"k": phi_k, ...}}``. Entry, exit and rotations are
            optional.

        Returns
        -------
        diagram: UprightDiagram
            Converted diagram. It is not validated.
        """
        return cls(
            strand_count=data_dict["strands"],
            crossings=tuple(Crossing.fromdict(c) for c in data_dict.get("crossings", [])),
            rotations={int(k): v for k, v in data_dict.get("rotations", {}).items()},
            entry=data_dict.get("entry", 1),
            exit=data_dict.get("exit", data_dict["strands"]),
        )

    def asdict(self) -> dict:
        """Export self as a JSON-compatible dict with deterministic ordering."""
        return {
            "strands": self.strand_count,
            "entry": self.entry,
            "exit": self.exit,
            "crossings": [c.asdict() for c in self.crossings],
            "rotations": {str(k): v for k, v in self.rotations},
        }

    def rotation(self, label: int) -> int:
        """Turning number of the strand with the given label."""
        return dict(self.rotations).get(label, 0)

    @property
    def writhe(self) -> int:
        return writhe(self)

    @property
    def rotation_total(self) -> int:
        return rotation_total(self)

    def successors(self) -> t.Dict[int, int]:
        """Map each strand label to the label following it along the knot."""
        following = {}
        for c in self.crossings:
            following[c.i] = c.ip
            following[c.j] = c.jp
        return following

    def mirror(self) -> "UprightDiagram":
        """Reflect the diagram in a vertical line: signs and turning numbers change sign."""
        return UprightDiagram(
            strand_count=self.strand_count,
            crossings=tuple(c.mirror() for c in self.crossings),
            rotations=tuple((k, -v) for k, v in self.rotations),
            entry=self.entry,
            exit=self.exit,
        )

    def validate(self):
        """Raise InvalidDiagramError unless the crossings trace a single long component."""
        validate_diagram(self)


def writhe(d: UprightDiagram) -> int:
    """Sum of the crossing signs."""
    return sum(c.sign for c in d.crossings)


def rotation_total(d: UprightDiagram) -> int:
    """Sum of the turning numbers of all strands."""
    return sum(v for _, v in d.rotations)


def validate_diagram(d: UprightDiagram):
    """Check the labels and the single-component traversal of a diagram.

    Parameters
    ----------
    d: pertalex.diagram.UprightDiagram
        The diagram to check.

    Raises
    ------
    pertalex.exceptions.InvalidDiagramError
        if a label is out of range, reused in the same role or never used, if a crossing has
        equal incoming or equal outgoing labels, or if walking from the entry does not visit
        every strand before reaching the exit.
    """
    labels = range(1, d.strand_count + 1)
    if d.strand_count < 1:
        raise exceptions.InvalidDiagramError("a diagram needs at least one strand")
    if d.entry not in labels or d.exit not in labels:
        raise exceptions.InvalidDiagramError(
            f"entry {d.entry} and exit {d.exit} must be labels in 1..{d.strand_count}"
        )

    incoming: t.Dict[int, int] = {}
    outgoing: t.Dict[int, int] = {}
    for index, c in enumerate(d.crossings):
        for label in c.labels:
            if label not in labels:
                raise exceptions.InvalidDiagramError(
                    f"crossing {index} references label {label} outside 1..{d.strand_count}"
                )
        if c.i == c.j or c.ip == c.jp:
            raise exceptions.InvalidDiagramError(
                f"crossing {index} uses one strand for both arcs: {c.asdict()}"
            )
        for label, role in ((c.i, incoming), (c.j, incoming), (c.ip, outgoing), (c.jp, outgoing)):
            if label in role:
                raise exceptions.InvalidDiagramError(
                    f"label {label} is used twice in the same role (crossing {index})"
                )
            role[label] = index

    if d.entry in outgoing:
        raise exceptions.InvalidDiagramError(f"entry strand {d.entry} leaves a crossing")
    if d.exit in incoming:
        raise exceptions.InvalidDiagramError(f"exit strand {d.exit} enters a crossing")
    for label in labels:
        if label != d.entry and label not in outgoing:
            raise exceptions.InvalidDiagramError(f"strand {label} is dangling: nothing leads to it")
        if label != d.exit and label not in incoming:
            raise exceptions.InvalidDiagramError(f"strand {label} is dangling: it leads nowhere")

    for label, _ in d.rotations:
        if label not in labels:
            raise exceptions.InvalidDiagramError(f"turning number given for unknown strand {label}")

    following = d.successors()
    visited = [d.entry]
    while visited[-1] != d.exit:
        visited.append(following[visited[-1]])
        if len(visited) > d.strand_count:
            break
    if len(visited) != d.strand_count or visited[-1] != d.exit:
        raise exceptions.InvalidDiagramError(
            f"walking from strand {d.entry} visits {len(visited)} of {d.strand_count} strands; "
            + "the diagram has closed components"
        )
