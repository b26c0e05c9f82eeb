# Copyright The pertalex contributors
# SPDX-License-Identifier: Apache-2.0
"""Dense univariate Z[T] helpers on top of sympy's ``dup_*`` routines.

A dense polynomial ("dup") is a list of coefficients ordered from the highest degree
down to the constant term, with no leading zeros. The zero polynomial is ``[]``.
"""

import typing as t

from sympy.polys.densearith import dup_add, dup_exquo, dup_mul, dup_neg, dup_sub
from sympy.polys.densebasic import dup_degree, dup_LC, dup_strip
from sympy.polys.domains import ZZ
from sympy.polys.euclidtools import dup_inner_gcd, dup_lcm

Dup = t.List[t.Any]

ONE: Dup = [ZZ(1)]


def from_coefficients(coefficients: t.Mapping[int, int]) -> Dup:
    """Build a dup from a ``{degree: coefficient}`` mapping with nonnegative degrees."""
    if not coefficients:
        return []
    degree = max(coefficients)
    return dup_strip([ZZ(coefficients.get(k, 0)) for k in range(degree, -1, -1)])


def to_coefficients(f: Dup) -> t.Dict[int, int]:
    """Return the ``{degree: coefficient}`` mapping of a dup, zero coefficients omitted."""
    degree = len(f) - 1
    return {degree - k: int(c) for k, c in enumerate(f) if c}


def monomial(degree: int) -> Dup:
    return [ZZ(1)] + [ZZ(0)] * degree


def is_one(f: Dup) -> bool:
    return len(f) == 1 and f[0] == 1


def trailing_zeros(f: Dup) -> int:
    """Return the multiplicity of T as a factor of f."""
    count = 0
    for c in reversed(f):
        if c:
            break
        count += 1
    return count


def drop_trailing_zeros(f: Dup) -> Dup:
    count = trailing_zeros(f)
    return f[: len(f) - count] if count else f


def add(f: Dup, g: Dup) -> Dup:
    return dup_add(f, g, ZZ)


def sub(f: Dup, g: Dup) -> Dup:
    return dup_sub(f, g, ZZ)


def mul(f: Dup, g: Dup) -> Dup:
    if not f or not g:
        return []
    return dup_mul(f, g, ZZ)


def neg(f: Dup) -> Dup:
    return dup_neg(f, ZZ)


def exquo(f: Dup, g: Dup) -> Dup:
    """Exact quotient; raises sympy's ``ExactQuotientFailed`` when g does not divide f."""
    if not f:
        return []
    if is_one(g):
        return f
    return dup_exquo(f, g, ZZ)


def cofactors(f: Dup, g: Dup) -> t.Tuple[Dup, Dup, Dup]:
    """Return ``(gcd, f / gcd, g / gcd)`` with the gcd taken in Z[T] (contents included)."""
    if is_one(g):
        return ONE, f, g
    return dup_inner_gcd(f, g, ZZ)


def lcm(f: Dup, g: Dup) -> Dup:
    if is_one(f):
        return g
    if is_one(g) or f == g:
        return f
    return dup_lcm(f, g, ZZ)


def degree(f: Dup) -> int:
    return dup_degree(f)


def leading_coefficient(f: Dup) -> int:
    return int(dup_LC(f, ZZ))
