# Copyright The pertalex contributors
# SPDX-License-Identifier: Apache-2.0

import logging
from fractions import Fraction

from .. import exceptions
from ..diagram import UprightDiagram
from ..markov import TangleChain, walk_determinant
from ..ring import LaurentPoly

logger = logging.getLogger(__name__)


def normalization_exponent(d: UprightDiagram) -> int:
    """Return ``-phi(D) - w(D)``, twice the power of T that symmetrizes ``det(I - A)``."""
    return -d.rotation_total - d.writhe


def alexander(d: UprightDiagram) -> LaurentPoly:
    """Symmetrized Alexander polynomial ``T^((-phi - w) / 2) * det(I - A)`` of a long knot.

    Parameters
    ----------
    d: pertalex.diagram.UprightDiagram
        A valid long knot diagram.

    Returns
    -------
    alexander: pertalex.ring.LaurentPoly
        Symmetric polynomial with integer exponents and value 1 at T = 1.

    Raises
    ------
    pertalex.exceptions.InvalidDiagramError
        if the diagram is not valid.
    pertalex.exceptions.GrainError
        if half-integer exponents survive the normalization, which means the turning numbers
        or crossing signs of the diagram are inconsistent.
    """
    determinant = walk_determinant(TangleChain.from_diagram(d)).as_poly()
    polynomial = determinant.shift(Fraction(normalization_exponent(d), 2))
    if not polynomial.is_integral:
        raise exceptions.GrainError(
            f"det(I - A) = {determinant} keeps half-integer exponents after normalization"
        )

    if not polynomial.is_symmetric():
        logger.warning("the Alexander polynomial %s of a diagram is not symmetric", polynomial)
    return polynomial
