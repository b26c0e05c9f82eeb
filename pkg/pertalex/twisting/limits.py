# Copyright The pertalex contributors
# SPDX-License-Identifier: Apache-2.0
"""Limits of a twisted family as the number of full twists goes to infinity.

Infinitely many full twists on n strands send every incoming strand to the outgoing strand at
position j with probability ``T^(j-1) / (1 + T + ... + T^(n-1))``. Replacing the slot of ``D_0``
by such an infinite twist vertex gives the chain ``D_inf``; putting one full twist between two
vertices gives ``D_inf^tau``, whose twist crossings carry the growth rate of rho_1.
"""

import logging
import typing as t
from fractions import Fraction

from .. import exceptions
from ..diagram import ClosureLayout, Crossing, compile_closure
from ..invariants import r1_crossing
from ..markov import TangleChain, chain_from_layout, greens_matrix, walk_determinant
from ..ring import LaurentPoly, RatFun
from .family import TwistedFamily

logger = logging.getLogger(__name__)


def layout_infinity(f: TwistedFamily) -> ClosureLayout:
    """Compiled ``D_0`` with the slot replaced by one infinite twist vertex."""
    return compile_closure(f.strand_count, f.blocks([f.vertex()]), f.cut)


def layout_tau_infinity(f: TwistedFamily) -> ClosureLayout:
    """Compiled ``D_0`` with vertex, one full twist and vertex in the slot."""
    middle = [f.vertex()] + list(f.twist_word().letters) + [f.vertex()]
    return compile_closure(f.strand_count, f.blocks(middle), f.cut)


def build_d_infinity(f: TwistedFamily) -> TangleChain:
    """Chain of ``D_inf``."""
    return chain_from_layout(layout_infinity(f))


def build_d_tau_infinity(f: TwistedFamily) -> t.Tuple[TangleChain, t.List[Crossing]]:
    """Chain of ``D_inf^tau`` and its ``n(n-1)`` twist crossings, bottom to top."""
    layout = layout_tau_infinity(f)
    first = len(f.prefix) + 1
    twist = layout.crossings_in_blocks(range(first, first + f.twist_crossings))
    return chain_from_layout(layout), twist


def normalization_exponent(f: TwistedFamily) -> int:
    """Return ``-phi(D_0) - w(D_0)``.

    Full twists neither turn nor change the rotation total, so the value is read from the
    layout of ``D_inf`` whose only crossings are those of ``D_0`` outside the slot.
    """
    layout = layout_infinity(f)
    rotation = sum(r for _, r in layout.rotations)
    return -rotation - sum(c.sign for c in layout.crossings)


def alexander_limit(f: TwistedFamily) -> RatFun:
    """Limit of ``T^(t n(n-1) / 2) * Delta(K_t)`` as t grows.

    Parameters
    ----------
    f: pertalex.twisting.TwistedFamily
        The family.

    Returns
    -------
    limit: pertalex.ring.RatFun
        ``T^((-phi(D_0) - w(D_0)) / 2) * det(I - A_inf)``, worth ``1/n`` up to sign at T = 1.
    """
    determinant = walk_determinant(build_d_infinity(f))
    return determinant * _power(Fraction(normalization_exponent(f), 2))


def growth_rate(f: TwistedFamily) -> RatFun:
    """Limit of the rho_1 differences ``d_t`` of a family.

    The value is ``T^(-phi(D_0) - w(D_0)) * det(I - A)^2 * sum_k R_1(c_k)`` over the twist
    crossings ``c_k`` of ``D_inf^tau``, computed exactly over Z(T).

    Raises
    ------
    pertalex.exceptions.SingularMatrixError
        if ``I - A`` of ``D_inf^tau`` is singular, which a valid family never produces.
    """
    chain, twist = build_d_tau_infinity(f)
    greens = greens_matrix(chain)
    determinant = walk_determinant(chain)

    total = RatFun(0)
    for c in twist:
        total = total + r1_crossing(greens, c)

    rate = _power(normalization_exponent(f)) * determinant * determinant * total
    logger.debug("growth rate of %s is %s", f, rate)
    return rate


def twist_determinant_law(f: TwistedFamily) -> t.Tuple[RatFun, RatFun, t.Union[int, Fraction]]:
    """Return ``det(I - A_inf^tau)``, ``det(I - A_inf)`` and the exponent alpha.

    alpha is defined by ``det(I - A_inf^tau) = T^alpha * alexander_limit(f)``.

    Raises
    ------
    pertalex.exceptions.BookkeepingError
        if the two determinants differ or their ratio to the limit is not a power of T.
    """
    det_tau = walk_determinant(build_d_tau_infinity(f)[0])
    det_infinity = walk_determinant(build_d_infinity(f))
    if det_tau != det_infinity:
        raise exceptions.BookkeepingError(
            f"det(I - A) changes from {det_infinity} to {det_tau} when a full twist is added"
        )

    ratio = det_tau / alexander_limit(f)
    if not ratio.is_polynomial or ratio.as_poly() != _power(ratio.as_poly().min_exponent).num:
        raise exceptions.BookkeepingError(f"det(I - A) / limit = {ratio} is not a power of T")

    alpha = ratio.as_poly().min_exponent
    return det_tau, det_infinity, int(alpha) if alpha.denominator == 1 else alpha


def _power(exponent: t.Union[int, Fraction]) -> RatFun:
    return RatFun(LaurentPoly.monomial(exponent))
