# Copyright The pertalex contributors
# SPDX-License-Identifier: Apache-2.0

import typing as t
from dataclasses import dataclass

from .. import exceptions
from ..ring import ONE, ZERO, LaurentPoly, RatFun, RatMatrix, T, mat_det
from .braid_word import BraidWord

_T_INVERSE = LaurentPoly.monomial(-1)


@dataclass(frozen=True, eq=False)
class BurauMatrix(RatMatrix):
    """Square matrix of the unreduced Burau representation.

    Entry (i, j) is the formal weight of a walk entering the braid on strand i and leaving on
    strand j, so every row sums to 1.

    Raises
    ------
    pertalex.exceptions.ShapeError
        if the matrix is not square.
    ValueError
        if a row does not sum to 1.
    """

    def __post_init__(self):
        super().__post_init__()
        self._require_square("a Burau matrix")

        one = RatFun(ONE)
        for r, total in enumerate(self.row_sums()):
            if total != one:
                raise ValueError(f"row {r + 1} of a Burau matrix sums to {total}, not 1")

    @classmethod
    def from_matrix(cls, matrix: RatMatrix) -> "BurauMatrix":
        return cls(matrix.rows, matrix.cols, matrix.entries)


def generator_matrix(strand_count: int, letter: int) -> BurauMatrix:
    """Burau matrix of a single generator or its inverse, embedded in the identity."""
    word = BraidWord(strand_count, (letter,))
    rows = _identity_rows(word.strand_count)
    _apply_letter(rows, letter)
    return _to_burau(rows)


def burau(w: BraidWord) -> BurauMatrix:
    """Unreduced Burau matrix of a braid word.

    Parameters
    ----------
    w: pertalex.braid.BraidWord
        The braid, read bottom to top.

    Returns
    -------
    matrix: pertalex.braid.BurauMatrix
        Product of the generator matrices in word order. The image of the generator k has the
        block ``[[1 - T, T], [1, 0]]`` in rows and columns k, k+1, its inverse the block
        ``[[0, 1], [1/T, 1 - 1/T]]``.
    """
    rows = _identity_rows(w.strand_count)
    for letter in w.letters:
        _apply_letter(rows, letter)
    return _to_burau(rows)


def burau_alexander(w: BraidWord) -> LaurentPoly:
    """Alexander polynomial of the closure of w, from a principal minor of ``I - burau(w)``.

    The vector ``(1, T, ..., T^(n-1))`` is fixed by ``burau(w)`` from the left and its rows sum
    to 1, so every principal minor of ``I - burau(w)`` is the Alexander polynomial up to a unit.
    The result is centered at exponent 0 and has value 1 at T = 1.

    Raises
    ------
    pertalex.exceptions.NotAKnotError
        if the closure of w is a link.
    """
    if not w.is_knot_closure:
        raise exceptions.NotAKnotError(f"the closure of {w} has several components")

    matrix = burau(w)
    size = w.strand_count
    reduced = RatMatrix.identity(size - 1) - matrix.submatrix(range(1, size), range(1, size))
    minor = mat_det(reduced).as_poly().symmetrized()

    if minor.evaluate(1) < 0:
        minor = -minor
    return minor


def _identity_rows(size: int) -> t.List[t.List[LaurentPoly]]:
    return [[ONE if r == c else ZERO for c in range(size)] for r in range(size)]


def _apply_letter(rows: t.List[t.List[LaurentPoly]], letter: int):
    # Right multiplication only touches columns k and k+1.
    left = abs(letter) - 1
    right = left + 1
    for row in rows:
        a, b = row[left], row[right]
        if letter > 0:
            row[left] = a * (1 - T) + b
            row[right] = a * T
        else:
            row[left] = b * _T_INVERSE
            row[right] = a + b * (1 - _T_INVERSE)


def _to_burau(rows: t.List[t.List[LaurentPoly]]) -> BurauMatrix:
    return BurauMatrix.from_matrix(RatMatrix.from_rows(rows))
