# Copyright The pertalex contributors
# SPDX-License-Identifier: Apache-2.0

import math
import typing as t
from dataclasses import dataclass
from fractions import Fraction

from .. import exceptions
from . import _dense
from .laurent_poly import GRAIN, ONE, ZERO, LaurentPoly


@dataclass(frozen=True)
class RatFun:
    """Reduced quotient of two Laurent polynomials.

    Every instance is stored in canonical form, so two rational functions are equal exactly when
    their fields are equal. The denominator has integer exponents, minimal exponent 0, a positive
    leading coefficient and no common factor with the numerator over Z[T].

    Parameters
    ----------
    num: pertalex.ring.LaurentPoly
        Numerator. May carry half-integer exponents as long as they share one grain.
    den: pertalex.ring.LaurentPoly, optional
        Denominator. Default is 1.

    Raises
    ------
    pertalex.exceptions.ZeroDenominatorError
        if den is the zero polynomial.
    """

    num: LaurentPoly
    den: LaurentPoly = ONE

    def __post_init__(self):
        num, den = _canonical_pair(_as_poly(self.num), _as_poly(self.den))
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    @classmethod
    def fromdict(cls, data_dict: dict) -> "RatFun":
        """Generate a RatFun from ``{"num": <poly JSON>, "den": <poly JSON>}``."""
        return cls(
            num=LaurentPoly.fromdict(data_dict["num"]),
            den=LaurentPoly.fromdict(data_dict["den"]),
        )

    def asdict(self) -> dict:
        """Export self as a JSON-compatible dict with numerator and denominator polynomials."""
        return {"num": self.num.asdict(), "den": self.den.asdict()}

    # --- inspection -----------------------------------------------------------------------------

    def __bool__(self) -> bool:
        return bool(self.num)

    @property
    def is_polynomial(self) -> bool:
        """True if the denominator is 1."""
        return self.den == ONE

    def as_poly(self) -> LaurentPoly:
        """Return the numerator of a polynomial rational function.

        Raises
        ------
        ArithmeticError
            if the denominator is not 1.
        """
        if not self.is_polynomial:
            raise ArithmeticError(f"{self} is not a Laurent polynomial")
        return self.num

    def evaluate(self, value: t.Union[int, Fraction, float]) -> t.Union[Fraction, float]:
        """Evaluate at T = value, exactly for int and Fraction input.

        Raises
        ------
        ZeroDivisionError
            if the denominator vanishes at value.
        """
        denominator = self.den.evaluate(value)
        if denominator == 0:
            raise ZeroDivisionError(f"denominator of {self} vanishes at T = {value}")
        return self.num.evaluate(value) / denominator

    # --- arithmetic -----------------------------------------------------------------------------

    def __neg__(self) -> "RatFun":
        return _trusted(-self.num, self.den)

    def __add__(self, other) -> "RatFun":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not other.num:
            return self
        if not self.num:
            return other
        if self.den == other.den:
            return RatFun(self.num + other.num, self.den)
        return RatFun(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __sub__(self, other) -> "RatFun":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "RatFun":
        return (-self) + other

    def __mul__(self, other) -> "RatFun":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not self.num or not other.num:
            return RatFun(ZERO)
        if self.is_polynomial and other.is_polynomial:
            return _trusted(self.num * other.num, ONE)
        return RatFun(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "RatFun":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not other.num:
            raise exceptions.ZeroDenominatorError(f"division of {self} by zero")
        return RatFun(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other) -> "RatFun":
        return _coerce(other) / self

    def __pow__(self, exponent: int) -> "RatFun":
        if exponent < 0:
            return RatFun(ONE) / (self ** (-exponent))
        return RatFun(self.num**exponent, self.den**exponent)

    def to_str(self, variable: str = "T") -> str:
        """Render as ``num / den``, parenthesizing multi-term parts."""
        if self.is_polynomial:
            return self.num.to_str(variable)
        return f"{_wrapped(self.num, variable)} / {_wrapped(self.den, variable)}"

    def __str__(self) -> str:
        return self.to_str()

    def __repr__(self) -> str:
        return f"RatFun('{self}')"


def ratfun_canonicalize(num: LaurentPoly, den: LaurentPoly) -> RatFun:
    """Bring ``num / den`` to canonical form.

    Parameters
    ----------
    num: pertalex.ring.LaurentPoly
        Numerator.
    den: pertalex.ring.LaurentPoly
        Denominator.

    Returns
    -------
    ratfun: pertalex.ring.RatFun
        The reduced fraction. ``ratfun_canonicalize(p * q, r * q)`` equals
        ``ratfun_canonicalize(p, r)`` for every nonzero q.

    Raises
    ------
    pertalex.exceptions.ZeroDenominatorError
        if den is the zero polynomial.
    pertalex.exceptions.GrainError
        if num or den mixes integer and half-integer exponents.
    """
    return RatFun(num, den)


def _canonical_pair(num: LaurentPoly, den: LaurentPoly) -> t.Tuple[LaurentPoly, LaurentPoly]:
    if not den:
        raise exceptions.ZeroDenominatorError(f"{num} / 0 has a zero denominator")
    if not num:
        return ZERO, ONE
    if den == ONE:
        return num, ONE

    num_base, num_dense = num.to_dup_half()
    den_base, den_dense = den.to_dup_half()
    offset = Fraction(num_base - den_base, GRAIN)

    if len(den_dense) == 1:
        scale = int(den_dense[0])
        common = math.gcd(num.content(), abs(scale))
        if scale < 0:
            common = -common
        reduced = LaurentPoly.from_dup(num_dense).shift(offset)
        return (
            LaurentPoly(tuple((e, c // common) for e, c in reduced.terms)),
            LaurentPoly.constant(scale // common),
        )

    _, num_cofactor, den_cofactor = _dense.cofactors(num_dense, den_dense)
    if _dense.leading_coefficient(den_cofactor) < 0:
        num_cofactor = _dense.neg(num_cofactor)
        den_cofactor = _dense.neg(den_cofactor)

    return LaurentPoly.from_dup(num_cofactor).shift(offset), LaurentPoly.from_dup(den_cofactor)


def _trusted(num: LaurentPoly, den: LaurentPoly) -> RatFun:
    # num and den are already coprime with a normalized den.
    ratfun = object.__new__(RatFun)
    object.__setattr__(ratfun, "num", num if num else ZERO)
    object.__setattr__(ratfun, "den", den if num else ONE)
    return ratfun


def _as_poly(value) -> LaurentPoly:
    if isinstance(value, LaurentPoly):
        return value
    if isinstance(value, int):
        return LaurentPoly.constant(value)
    raise TypeError(f"expected LaurentPoly or int, got {type(value).__name__}")


def _coerce(value) -> t.Union[RatFun, t.Any]:
    if isinstance(value, RatFun):
        return value
    if isinstance(value, (LaurentPoly, int)):
        return _trusted(_as_poly(value), ONE)
    return NotImplemented


def _wrapped(poly: LaurentPoly, variable: str) -> str:
    rendered = poly.to_str(variable)
    return f"({rendered})" if len(poly) > 1 else rendered
