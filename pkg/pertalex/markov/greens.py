# Copyright The pertalex contributors
# SPDX-License-Identifier: Apache-2.0

import logging
import typing as t

from .. import exceptions
from ..ring import RatFun, RatMatrix, mat_adjugate_and_det, mat_det, mat_inverse
from .tangle_chain import State, TangleChain

logger = logging.getLogger(__name__)


def identity_minus(m: TangleChain) -> RatMatrix:
    """Return ``I - A`` for the transition matrix A of a chain."""
    return RatMatrix.identity(len(m)) - m.matrix()


def walk_determinant(m: TangleChain) -> RatFun:
    """Return ``det(I - A)``."""
    return mat_det(identity_minus(m))


def greens_matrix(m: TangleChain) -> RatMatrix:
    """Green's matrix of a chain, the exact inverse of ``I - A``.

    Entry ``(s, t)`` is the weighted sum over all walks from state s to state t, indexed by the
    positions of s and t in ``m.states``.

    Parameters
    ----------
    m: pertalex.markov.TangleChain
        The chain.

    Returns
    -------
    greens: pertalex.ring.RatMatrix
        ``(I - A)^-1``.

    Raises
    ------
    pertalex.exceptions.SingularMatrixError
        if ``I - A`` is singular.
    """
    try:
        return mat_inverse(identity_minus(m))
    except exceptions.SingularMatrixError:
        logger.debug("I - A is singular for a chain on %d states", len(m))
        raise exceptions.SingularMatrixError(
            f"the walk matrix of the chain on {len(m)} states is not invertible"
        ) from None


def greens_adjugate(m: TangleChain) -> t.Tuple[RatMatrix, RatFun]:
    """Return ``(adj(I - A), det(I - A))``, which avoids dividing by the determinant."""
    return mat_adjugate_and_det(identity_minus(m))


def greens_entry(m: TangleChain, greens: RatMatrix, source: State, target: State) -> RatFun:
    return greens[m.index(source), m.index(target)]
