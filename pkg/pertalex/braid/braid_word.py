# Copyright The pertalex contributors
# SPDX-License-Identifier: Apache-2.0

import typing as t
from dataclasses import dataclass

from .. import exceptions


@dataclass(frozen=True)
class BraidWord:
    """A word in the standard generators of the braid group on n strands.

    Braids are read from bottom to top. The letter k stands for the generator crossing the
    strands at positions k and k+1 positively, -k for its inverse.

    Parameters
    ----------
    strand_count: int
        Number of strands n, at least 2.
    letters: tuple of int, optional
        Signed generator indices with 0 < |k| < n. Default is the empty word.

    Raises
    ------
    pertalex.exceptions.InvalidBraidError
        if the strand count is below 2 or a letter is out of range.
    """

    strand_count: int
    letters: t.Tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(int(k) for k in self.letters))

        if self.strand_count < 2:
            raise exceptions.InvalidBraidError(
                f"a braid needs at least 2 strands, got {self.strand_count}"
            )
        for k in self.letters:
            if k == 0 or abs(k) >= self.strand_count:
                raise exceptions.InvalidBraidError(
                    f"letter {k} is not a generator of the braid group on "
                    + f"{self.strand_count} strands"
                )

    @classmethod
    def from_text(cls, text: str, strand_count: t.Optional[int] = None) -> "BraidWord":
        """Parse whitespace-separated signed integers, e.g. ``"1 1 -2"``.

        Parameters
        ----------
        text: str
            The word.
        strand_count: int, optional
            Number of strands. If None, the smallest strand count fitting the letters is used.

        Raises
        ------
        pertalex.exceptions.InvalidBraidError
            if a token is not an integer or a letter does not fit the strand count.
        """
        try:
            letters = tuple(int(token) for token in text.split())
        except ValueError as e:
            raise exceptions.InvalidBraidError(f"cannot read braid word {text!r}") from e

        if strand_count is None:
            strand_count = max([abs(k) + 1 for k in letters] + [2])
        return cls(strand_count, letters)

    @classmethod
    def fromdict(cls, data_dict: dict) -> "BraidWord":
        """Generate a BraidWord from ``{"n": ..., "word": [...]}``."""
        return cls(strand_count=data_dict["n"], letters=tuple(data_dict["word"]))

    def asdict(self) -> dict:
        return {"n": self.strand_count, "word": list(self.letters)}

    def __len__(self) -> int:
        return len(self.letters)

    def __add__(self, other: "BraidWord") -> "BraidWord":
        if not isinstance(other, BraidWord):
            return NotImplemented
        if other.strand_count != self.strand_count:
            raise exceptions.InvalidBraidError(
                f"cannot concatenate braids on {self.strand_count} and {other.strand_count} strands"
            )
        return BraidWord(self.strand_count, self.letters + other.letters)

    def __mul__(self, power: int) -> "BraidWord":
        """Repeat the word; negative powers repeat the inverse."""
        if power < 0:
            return self.inverse() * (-power)
        return BraidWord(self.strand_count, self.letters * power)

    def inverse(self) -> "BraidWord":
        return BraidWord(self.strand_count, tuple(-k for k in reversed(self.letters)))

    def mirror(self) -> "BraidWord":
        """Negate every letter, which mirrors the closure."""
        return BraidWord(self.strand_count, tuple(-k for k in self.letters))

    def shifted(self, offset: int, strand_count: int) -> "BraidWord":
        """Place the word on strands ``offset + 1, ...`` of a braid with strand_count strands."""
        return BraidWord(
            strand_count, tuple(k + offset if k > 0 else k - offset for k in self.letters)
        )

    @property
    def writhe(self) -> int:
        """Exponent sum of the word."""
        return sum(1 if k > 0 else -1 for k in self.letters)

    def permutation(self) -> t.Tuple[int, ...]:
        """Return p with p[i] the top position (0-based) of the strand starting at bottom i."""
        position_of = list(range(self.strand_count))
        strand_at = list(range(self.strand_count))

        for k in self.letters:
            left = abs(k) - 1
            a, b = strand_at[left], strand_at[left + 1]
            strand_at[left], strand_at[left + 1] = b, a
            position_of[a], position_of[b] = left + 1, left

        return tuple(position_of)

    def closure_components(self) -> t.List[t.List[int]]:
        """Return the cycles of the permutation, each as a list of bottom positions."""
        permutation = self.permutation()
        seen = set()
        components = []
        for start in range(self.strand_count):
            if start in seen:
                continue
            cycle = []
            position = start
            while position not in seen:
                seen.add(position)
                cycle.append(position)
                position = permutation[position]
            components.append(cycle)
        return components

    @property
    def is_knot_closure(self) -> bool:
        """True if the closure of the braid has a single component."""
        return len(self.closure_components()) == 1

    def __str__(self) -> str:
        return " ".join(str(k) for k in self.letters)
