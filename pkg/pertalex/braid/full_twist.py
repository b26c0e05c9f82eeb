# Copyright The pertalex contributors
# SPDX-License-Identifier: Apache-2.0

from ..ring import ZERO, LaurentPoly, RatFun, RatMatrix, T
from .braid_word import BraidWord
from .burau import BurauMatrix


def full_twist_word(n: int) -> BraidWord:
    """Return the full twist ``(1 2 ... n-1)^n`` on n strands.

    Raises
    ------
    ValueError
        if n < 2.
    """
    _require_strands(n)
    return BraidWord(n, tuple(range(1, n)) * n)


def p_nk(n: int, k: int) -> LaurentPoly:
    """Return ``(1 - T) * (1 + T^n + T^2n + ... + T^((k-1)n))``.

    Parameters
    ----------
    n: int
        Number of strands, at least 2.
    k: int
        Number of full twists, at least 1.

    Raises
    ------
    ValueError
        if n < 2 or k < 1.
    """
    _require_strands(n)
    if k < 1:
        raise ValueError(f"the twist count must be at least 1, got {k}")
    return (1 - T) * LaurentPoly.from_dict({n * i: 1 for i in range(k)})


def full_twist_power(n: int, k: int) -> BurauMatrix:
    """Burau matrix of the k-th power of the full twist, from its closed form.

    Off-diagonal entries are ``T^(j-1) * p`` and diagonal entries ``1 - p * sum_{m != i} T^(m-1)``
    with ``p = p_nk(n, k)`` and 1-based indices.
    """
    _require_strands(n)
    if k < 0:
        raise ValueError(f"the twist count must be nonnegative, got {k}")
    if k == 0:
        return BurauMatrix.from_matrix(RatMatrix.identity(n))

    p = p_nk(n, k)
    powers = [T**m for m in range(n)]
    total = sum(powers, ZERO)

    rows = []
    for i in range(n):
        rows.append([1 - p * (total - powers[i]) if i == j else powers[j] * p for j in range(n)])
    return BurauMatrix.from_matrix(RatMatrix.from_rows(rows))


def full_twist_limit(n: int) -> BurauMatrix:
    """Coefficientwise limit of the full twist powers: every row is ``T^(j-1) / [n]``.

    ``[n] = 1 + T + ... + T^(n-1)``.
    """
    _require_strands(n)
    bracket = quantum_integer(n)
    row = [RatFun(T**j, bracket) for j in range(n)]
    return BurauMatrix.from_matrix(RatMatrix.from_rows([row] * n))


def quantum_integer(n: int) -> LaurentPoly:
    """Return ``1 + T + ... + T^(n-1)``."""
    return LaurentPoly.from_dict({m: 1 for m in range(n)}) if n > 0 else ZERO


def _require_strands(n: int):
    if n < 2:
        raise ValueError(f"a full twist needs at least 2 strands, got {n}")
