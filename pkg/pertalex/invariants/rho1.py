# Copyright The pertalex contributors
# SPDX-License-Identifier: Apache-2.0
"""The perturbed Alexander invariant rho_1.

With ``G = (I - A)^-1`` and Delta the Alexander polynomial,

    rho_1 = Delta^2 * (sum_c R_1(c) - sum_k phi_k * (g_kk - 1/2))

where for a crossing c with sign s, over strand i -> i+ and under strand j -> j+

    R_1(c) = s * (g_ji * (g_j+j + g_jj+ - g_ij) - g_ii * (g_jj+ - 1) - 1/2).

``rho1`` evaluates this with the adjugate of ``I - A`` and its determinant, so every
intermediate is a Laurent polynomial. The factors 1/2 are cleared by doubling every term and the
final halving is required to be exact. ``rho1_rational`` evaluates the formula over Z(T) as
written.
"""

import logging
import typing as t
from .. import exceptions
from ..diagram import Crossing, UprightDiagram
from ..markov import TangleChain, greens_adjugate, greens_matrix
from ..ring import LaurentPoly, RatFun, RatMatrix
from .alexander import alexander, normalization_exponent

logger = logging.getLogger(__name__)

_HALF = RatFun(LaurentPoly.constant(1), LaurentPoly.constant(2))


def r1_crossing(greens: RatMatrix, c: Crossing) -> RatFun:
    """Crossing contribution R_1(c) read from a Green's matrix indexed by label - 1.

    Raises
    ------
    IndexError
        if a label of c lies outside the matrix.
    """

    def g(a: int, b: int) -> RatFun:
        return greens[a - 1, b - 1]

    i, j, jp = c.i, c.j, c.jp
    value = g(j, i) * (g(jp, j) + g(j, jp) - g(i, j)) - g(i, i) * (g(j, jp) - 1) - _HALF
    return value if c.sign > 0 else -value


def doubled_r1_tilde(adjugate: RatMatrix, determinant: LaurentPoly, c: Crossing) -> LaurentPoly:
    """Return ``2 * det(I - A)^2 * R_1(c)`` from the adjugate of ``I - A``."""

    def g(a: int, b: int) -> LaurentPoly:
        return adjugate[a - 1, b - 1].as_poly()

    i, j, jp = c.i, c.j, c.jp
    value = (
        2 * g(j, i) * (g(jp, j) + g(j, jp) - g(i, j))
        - 2 * g(i, i) * (g(j, jp) - determinant)
        - determinant * determinant
    )
    return value if c.sign > 0 else -value


def doubled_rotation_tilde(
    adjugate: RatMatrix, determinant: LaurentPoly, label: int, rotation: int
) -> LaurentPoly:
    """Return ``2 * det(I - A)^2 * phi_k * (g_kk - 1/2)`` from the adjugate of ``I - A``."""
    diagonal = adjugate[label - 1, label - 1].as_poly()
    return rotation * (2 * determinant * diagonal - determinant * determinant)


def rho1(d: UprightDiagram) -> LaurentPoly:
    """Perturbed Alexander invariant of a long knot diagram.

    Parameters
    ----------
    d: pertalex.diagram.UprightDiagram
        A valid long knot diagram.

    Returns
    -------
    rho1: pertalex.ring.LaurentPoly
        Laurent polynomial with integer coefficients.

    Raises
    ------
    pertalex.exceptions.InvalidDiagramError
        if the diagram is not valid.
    pertalex.exceptions.BookkeepingError
        if the assembled value has odd coefficients or half-integer exponents, which can only
        come from inconsistent turning numbers or labels.
    """
    adjugate, determinant = greens_adjugate(TangleChain.from_diagram(d))
    determinant = determinant.as_poly()

    total = LaurentPoly()
    for c in d.crossings:
        total = total + doubled_r1_tilde(adjugate, determinant, c)
    for label, rotation in d.rotations:
        total = total - doubled_rotation_tilde(adjugate, determinant, label, rotation)

    doubled = total.shift(normalization_exponent(d))
    return _halved(doubled)


def rho1_rational(d: UprightDiagram) -> LaurentPoly:
    """rho_1 computed over Z(T) from the Green's matrix itself.

    Raises
    ------
    pertalex.exceptions.InvalidDiagramError
        if the diagram is not valid.
    pertalex.exceptions.BookkeepingError
        if the result is not a Laurent polynomial with integer coefficients.
    """
    greens = greens_matrix(TangleChain.from_diagram(d))

    total = RatFun(0)
    for c in d.crossings:
        total = total + r1_crossing(greens, c)
    for label, rotation in d.rotations:
        total = total - rotation * (greens[label - 1, label - 1] - _HALF)

    value = total * RatFun(alexander(d)) ** 2
    if not value.is_polynomial:
        raise exceptions.BookkeepingError(f"rho_1 = {value} is not a Laurent polynomial")
    return value.as_poly()


def _halved(doubled: LaurentPoly) -> LaurentPoly:
    try:
        terms: t.Dict[int, int] = doubled.integer_terms()
    except exceptions.GrainError as e:
        raise exceptions.BookkeepingError(f"2 rho_1 = {doubled} has half-integer exponents") from e

    odd = [exponent for exponent, coefficient in terms.items() if coefficient % 2]
    if odd:
        logger.debug("odd coefficients of 2 rho_1 at exponents %s", odd)
        raise exceptions.BookkeepingError(f"2 rho_1 = {doubled} has odd coefficients")
    return LaurentPoly.from_dict({e: c // 2 for e, c in terms.items()})
