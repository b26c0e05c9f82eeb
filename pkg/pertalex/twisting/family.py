# Copyright The pertalex contributors
# SPDX-License-Identifier: Apache-2.0

import logging
import typing as t
from dataclasses import dataclass

from .. import exceptions
from ..braid import BraidWord, full_twist_word
from ..diagram import Block, UprightDiagram, VertexBlock, compile_closure

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class TwistedFamily:
    """Knots ``K_t`` closing ``prefix * Omega_n^t * suffix``, the full twists placed on a slot.

    Parameters
    ----------
    strand_count: int
        Number of strands m of the ambient braid.
    prefix: pertalex.braid.BraidWord
        Braid below the twisted slot.
    suffix: pertalex.braid.BraidWord
        Braid above the twisted slot.
    slot: tuple of int
        First and last position (1-based, inclusive) of the twisted strands, at least 2 of them.
    cut: int, optional
        Position opened into the long knot. Default is 1.
    name: str, optional
        Display name of the family.

    Raises
    ------
    pertalex.exceptions.InvalidBraidError
        if a word does not fit the strand count or the slot is not a range of at least 2
        positions.
    pertalex.exceptions.NotAKnotError
        if the closures of ``K_0`` or ``K_1`` have more than one component. The full twist is a
        pure braid, so these two decide every t.
    """

    strand_count: int
    prefix: BraidWord
    suffix: BraidWord
    slot: t.Tuple[int, int]
    cut: int = 1
    name: t.Optional[str] = None

    def __post_init__(self):
        object.__setattr__(self, "slot", tuple(self.slot))
        for word in (self.prefix, self.suffix):
            if word.strand_count != self.strand_count:
                raise exceptions.InvalidBraidError(
                    f"a word on {word.strand_count} strands does not fit a family on "
                    + f"{self.strand_count} strands"
                )

        first, last = self.slot
        if not 1 <= first < last <= self.strand_count:
            raise exceptions.InvalidBraidError(
                f"slot {first}..{last} is not a range of at least 2 of the "
                + f"{self.strand_count} positions"
            )
        if not 1 <= self.cut <= self.strand_count:
            raise exceptions.InvalidBraidError(f"cut position {self.cut} is out of range")

        for twists in (0, 1):
            if not self.word_at(twists).is_knot_closure:
                raise exceptions.NotAKnotError(f"the family closes to a link at t = {twists}")

    @classmethod
    def fromdict(cls, data_dict: dict) -> "TwistedFamily":
        """Generate a TwistedFamily from ``{"m", "prefix", "suffix", "slot", "cut"}``."""
        strand_count = data_dict["m"]
        return cls(
            strand_count=strand_count,
            prefix=BraidWord(strand_count, tuple(data_dict.get("prefix", ()))),
            suffix=BraidWord(strand_count, tuple(data_dict.get("suffix", ()))),
            slot=tuple(data_dict["slot"]),
            cut=data_dict.get("cut", 1),
            name=data_dict.get("name"),
        )

    def asdict(self) -> dict:
        data_dict = {
            "m": self.strand_count,
            "prefix": list(self.prefix.letters),
            "suffix": list(self.suffix.letters),
            "slot": list(self.slot),
            "cut": self.cut,
        }
        if self.name is not None:
            data_dict["name"] = self.name
        return data_dict

    @property
    def width(self) -> int:
        """Number n of twisted strands."""
        return self.slot[1] - self.slot[0] + 1

    @property
    def twist_crossings(self) -> int:
        """Crossings added per full twist, ``n(n-1)``."""
        return self.width * (self.width - 1)

    def twist_word(self, twists: int = 1) -> BraidWord:
        """``Omega_n^twists`` placed on the slot; negative powers give inverse twists."""
        return full_twist_word(self.width).shifted(self.slot[0] - 1, self.strand_count) * twists

    def word_at(self, twists: int) -> BraidWord:
        return self.prefix + self.twist_word(twists) + self.suffix

    def mirror(self) -> "TwistedFamily":
        """Family of the mirror images. Its positive twists are the negative twists of self."""
        return TwistedFamily(
            strand_count=self.strand_count,
            prefix=self.prefix.mirror(),
            suffix=self.suffix.mirror(),
            slot=self.slot,
            cut=self.cut,
            name=None if self.name is None else f"mirror of {self.name}",
        )

    def blocks(self, middle: t.Sequence[Block]) -> t.List[Block]:
        """Compiler blocks with the given blocks between prefix and suffix."""
        return list(self.prefix.letters) + list(middle) + list(self.suffix.letters)

    def vertex(self) -> VertexBlock:
        return VertexBlock(start=self.slot[0], width=self.width)

    def __str__(self) -> str:
        if self.name is not None:
            return self.name
        first, last = self.slot
        return f"[{self.prefix}] Omega_{self.width}^t on {first}..{last} [{self.suffix}]"


def diagram_at(f: TwistedFamily, twists: int) -> UprightDiagram:
    """Long diagram ``D_t`` of the family member with the given number of full twists.

    Writhe grows by ``n(n-1)`` per twist while the rotation total stays that of ``D_0``. A negative
    count is compiled as the mirror of the mirror family's member.
    """
    if twists < 0:
        return diagram_at(f.mirror(), -twists).mirror()

    layout = compile_closure(f.strand_count, f.blocks(f.twist_word(twists).letters), f.cut)
    logger.debug("compiled %s at t = %d with %d strands", f, twists, layout.strand_count)
    return layout.diagram
