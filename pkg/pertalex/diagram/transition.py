# Copyright The pertalex contributors
# SPDX-License-Identifier: Apache-2.0

import typing as t

from ..ring import ZERO, LaurentPoly, RatMatrix, T
from .crossing import Crossing
from .upright_diagram import UprightDiagram, validate_diagram


def crossing_weights(c: Crossing) -> t.List[t.Tuple[int, int, LaurentPoly]]:
    """Return the transitions ``(from, to, weight)`` contributed by one crossing.

    The over strand continues with weight ``T^sign`` and jumps down to the under strand's
    continuation with weight ``1 - T^sign``; the under strand continues with weight 1.
    """
    power = T**c.sign
    return [(c.i, c.ip, power), (c.i, c.jp, 1 - power), (c.j, c.jp, LaurentPoly.constant(1))]


def transition_matrix(d: UprightDiagram) -> RatMatrix:
    """Sum of the crossing transition matrices of a diagram.

    Parameters
    ----------
    d: pertalex.diagram.UprightDiagram
        A valid diagram.

    Returns
    -------
    matrix: pertalex.ring.RatMatrix
        Square matrix indexed by strand label - 1. The exit row is zero.

    Raises
    ------
    pertalex.exceptions.InvalidDiagramError
        if the diagram is not valid.
    """
    validate_diagram(d)

    size = d.strand_count
    rows = [[ZERO] * size for _ in range(size)]
    for c in d.crossings:
        for source, target, weight in crossing_weights(c):
            rows[source - 1][target - 1] = rows[source - 1][target - 1] + weight
    return RatMatrix.from_rows(rows)
