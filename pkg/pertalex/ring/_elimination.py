# Copyright The pertalex contributors
# SPDX-License-Identifier: Apache-2.0
"""Fraction-free elimination on square matrices over Z[T] in dense ``dup`` form."""

import logging
import typing as t

from . import _dense

logger = logging.getLogger(__name__)

DupMatrix = t.List[t.List[_dense.Dup]]

# Below this size the Laplace expansion is cheaper than elimination.
COFACTOR_LIMIT = 5


def determinant(matrix: DupMatrix) -> _dense.Dup:
    """Return det(matrix), by cofactor expansion for small sizes and Bareiss otherwise."""
    if len(matrix) < COFACTOR_LIMIT:
        return cofactor_determinant(matrix)
    return bareiss_determinant(matrix)


def cofactor_determinant(matrix: DupMatrix) -> _dense.Dup:
    """Laplace expansion along the first row."""
    size = len(matrix)
    if size == 0:
        return _dense.ONE
    if size == 1:
        return matrix[0][0]
    if size == 2:
        return _dense.sub(
            _dense.mul(matrix[0][0], matrix[1][1]), _dense.mul(matrix[0][1], matrix[1][0])
        )

    total: _dense.Dup = []
    for column, entry in enumerate(matrix[0]):
        if not entry:
            continue
        minor = cofactor_determinant(_minor(matrix, 0, column))
        term = _dense.mul(entry, minor)
        total = _dense.sub(total, term) if column % 2 else _dense.add(total, term)
    return total


def bareiss_determinant(matrix: DupMatrix) -> _dense.Dup:
    """Fraction-free Bareiss elimination with row pivoting."""
    size = len(matrix)
    if size == 0:
        return _dense.ONE

    work = [list(row) for row in matrix]
    sign = 1
    previous = _dense.ONE
    logger.debug("bareiss determinant of a %dx%d matrix", size, size)

    for k in range(size - 1):
        pivot_row = _find_pivot(work, k, k)
        if pivot_row is None:
            return []
        if pivot_row != k:
            work[k], work[pivot_row] = work[pivot_row], work[k]
            sign = -sign

        pivot = work[k][k]
        for i in range(k + 1, size):
            factor = work[i][k]
            for j in range(k + 1, size):
                work[i][j] = _dense.exquo(
                    _dense.sub(_dense.mul(pivot, work[i][j]), _dense.mul(factor, work[k][j])),
                    previous,
                )
            work[i][k] = []
        previous = pivot

    result = work[size - 1][size - 1]
    return result if sign > 0 else _dense.neg(result)


def adjugate(matrix: DupMatrix) -> t.Tuple[DupMatrix, _dense.Dup]:
    """Return ``(adj(matrix), det(matrix))``.

    Uses fraction-free Gauss-Jordan elimination on ``[matrix | I]``. After the last step the left
    block is ``d * I`` with d the determinant of the row-permuted matrix, and the right block is
    the adjugate up to the permutation sign. Singular input falls back to cofactors.
    """
    size = len(matrix)
    if size == 0:
        return [], _dense.ONE

    width = 2 * size
    work = [
        list(row) + [_dense.ONE if c == r else [] for c in range(size)]
        for r, row in enumerate(matrix)
    ]
    sign = 1
    previous = _dense.ONE
    logger.debug("gauss-jordan adjugate of a %dx%d matrix", size, size)

    for k in range(size):
        pivot_row = _find_pivot(work, k, k)
        if pivot_row is None:
            return cofactor_adjugate(matrix), []
        if pivot_row != k:
            work[k], work[pivot_row] = work[pivot_row], work[k]
            sign = -sign

        pivot = work[k][k]
        pivot_line = work[k]
        for row in range(size):
            if row == k:
                continue
            line = work[row]
            factor = line[k]
            for column in range(width):
                if column == k:
                    continue
                scaled = _dense.mul(pivot, line[column])
                if factor and pivot_line[column]:
                    scaled = _dense.sub(scaled, _dense.mul(factor, pivot_line[column]))
                line[column] = _dense.exquo(scaled, previous)
            line[k] = []
        previous = pivot

    determinant_value = work[0][0]
    adjugate_rows = [row[size:] for row in work]
    if sign < 0:
        adjugate_rows = [[_dense.neg(entry) for entry in row] for row in adjugate_rows]
        determinant_value = _dense.neg(determinant_value)
    return adjugate_rows, determinant_value


def cofactor_adjugate(matrix: DupMatrix) -> DupMatrix:
    """Adjugate from signed minors, valid for singular matrices too."""
    size = len(matrix)
    if size == 1:
        return [[_dense.ONE]]

    result: DupMatrix = [[[] for _ in range(size)] for _ in range(size)]
    for i in range(size):
        for j in range(size):
            minor = determinant(_minor(matrix, i, j))
            result[j][i] = _dense.neg(minor) if (i + j) % 2 else minor
    return result


def _find_pivot(work: DupMatrix, column: int, start: int) -> t.Optional[int]:
    # Prefer the sparsest nonzero candidate to limit coefficient growth.
    best = None
    for row in range(start, len(work)):
        if work[row][column]:
            if best is None or len(work[row][column]) < len(work[best][column]):
                best = row
    return best


def _minor(matrix: DupMatrix, skip_row: int, skip_column: int) -> DupMatrix:
    return [
        [entry for c, entry in enumerate(row) if c != skip_column]
        for r, row in enumerate(matrix)
        if r != skip_row
    ]
