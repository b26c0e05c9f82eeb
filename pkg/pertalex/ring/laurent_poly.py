# Copyright The pertalex contributors
# SPDX-License-Identifier: Apache-2.0

import functools
import math
import typing as t
from dataclasses import dataclass
from fractions import Fraction

from sympy.polys.polyerrors import ExactQuotientFailed

from .. import exceptions
from . import _dense

Exponent = t.Union[int, Fraction]
Number = t.Union[int, Fraction, float]

# Exponents are stored as integer numerators over this fixed denominator.
GRAIN = 2


@dataclass(frozen=True)
class LaurentPoly:
    """Integer Laurent polynomial in T with integer or half-integer exponents.

    Parameters
    ----------
    terms: tuple of (int, int)
        Pairs ``(2 * exponent, coefficient)`` sorted by exponent. Any mapping or iterable of
        pairs is accepted and normalized: repeated exponents are merged and zero coefficients
        dropped, so the zero polynomial is the empty tuple.
    """

    terms: t.Tuple[t.Tuple[int, int], ...] = ()

    def __post_init__(self):
        items = self.terms.items() if isinstance(self.terms, t.Mapping) else self.terms

        combined: t.Dict[int, int] = {}
        for half_exponent, coefficient in items:
            key = int(half_exponent)
            combined[key] = combined.get(key, 0) + int(coefficient)

        object.__setattr__(
            self, "terms", tuple(sorted((e, c) for e, c in combined.items() if c != 0))
        )

    # --- construction ---------------------------------------------------------------------------

    @classmethod
    def from_dict(cls, coefficients: t.Mapping[Exponent, int]) -> "LaurentPoly":
        """Build a polynomial from ``{exponent: coefficient}`` with integer or half exponents."""
        return cls(tuple((_to_half_units(e), c) for e, c in coefficients.items()))

    @classmethod
    def monomial(cls, exponent: Exponent = 1, coefficient: int = 1) -> "LaurentPoly":
        return cls(((_to_half_units(exponent), coefficient),))

    @classmethod
    def constant(cls, value: int) -> "LaurentPoly":
        return cls(((0, value),))

    @classmethod
    def from_dup(cls, f: _dense.Dup, shift: int = 0) -> "LaurentPoly":
        """Build ``T^shift * f`` from a dense Z[T] polynomial."""
        return cls(
            tuple((GRAIN * (d + shift), c) for d, c in _dense.to_coefficients(f).items())
        )

    @classmethod
    def fromdict(cls, data_dict: dict) -> "LaurentPoly":
        """Generate a LaurentPoly from its JSON form ``{"terms": [[num, den, coeff], ...]}``.

        Parameters
        ----------
        data_dict: dict
            JSON representation. Every exponent is ``num / den`` with den 1 or 2.

        Returns
        -------
        poly: LaurentPoly
            Converted polynomial.

        Raises
        ------
        pertalex.exceptions.GrainError
            if an exponent denominator other than 1 or 2 is given.
        """
        terms = []
        for exponent_num, exponent_den, coefficient in data_dict["terms"]:
            if exponent_den not in (1, 2):
                raise exceptions.GrainError(
                    f"exponent {exponent_num}/{exponent_den} is not a multiple of 1/2"
                )
            terms.append((exponent_num * (GRAIN // exponent_den), coefficient))
        return cls(tuple(terms))

    # --- inspection -----------------------------------------------------------------------------

    def __bool__(self) -> bool:
        return len(self.terms) > 0

    def __len__(self) -> int:
        return len(self.terms)

    def items(self) -> t.Iterator[t.Tuple[Fraction, int]]:
        """Iterate over ``(exponent, coefficient)`` in ascending exponent order."""
        for half_exponent, coefficient in self.terms:
            yield Fraction(half_exponent, GRAIN), coefficient

    def coeff(self, exponent: Exponent) -> int:
        key = _to_half_units(exponent)
        for half_exponent, coefficient in self.terms:
            if half_exponent == key:
                return coefficient
        return 0

    @property
    def is_integral(self) -> bool:
        """True if every exponent is an integer."""
        return all(e % GRAIN == 0 for e, _ in self.terms)

    @property
    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and self.terms[0][0] == 0)

    @property
    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    @property
    def min_exponent(self) -> Fraction:
        self._require_nonzero("min_exponent")
        return Fraction(self.terms[0][0], GRAIN)

    @property
    def max_exponent(self) -> Fraction:
        self._require_nonzero("max_exponent")
        return Fraction(self.terms[-1][0], GRAIN)

    @property
    def leading_coefficient(self) -> int:
        self._require_nonzero("leading_coefficient")
        return self.terms[-1][1]

    def integer_terms(self) -> t.Dict[int, int]:
        """Return ``{exponent: coefficient}`` with integer exponents.

        Raises
        ------
        pertalex.exceptions.GrainError
            if a half-integer exponent is present.
        """
        self._require_integral("integer_terms")
        return {e // GRAIN: c for e, c in self.terms}

    def content(self) -> int:
        """Return the (nonnegative) gcd of the coefficients."""
        return functools.reduce(math.gcd, (c for _, c in self.terms), 0)

    # --- arithmetic -----------------------------------------------------------------------------

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly(tuple((e, -c) for e, c in self.terms))

    def __add__(self, other) -> "LaurentPoly":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return LaurentPoly(self.terms + other.terms)

    __radd__ = __add__

    def __sub__(self, other) -> "LaurentPoly":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return LaurentPoly(self.terms + tuple((e, -c) for e, c in other.terms))

    def __rsub__(self, other) -> "LaurentPoly":
        return (-self) + other

    def __mul__(self, other) -> "LaurentPoly":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented

        product: t.Dict[int, int] = {}
        for e1, c1 in self.terms:
            for e2, c2 in other.terms:
                product[e1 + e2] = product.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly(product)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "LaurentPoly":
        if exponent < 0:
            if not self.is_monomial or abs(self.terms[0][1]) != 1:
                raise ArithmeticError(f"{self} is not a unit of Z[T, 1/T]")
            (e, c), = self.terms
            return LaurentPoly(((e * exponent, c ** (-exponent)),))

        result = LaurentPoly.constant(1)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def shift(self, exponent: Exponent) -> "LaurentPoly":
        """Multiply by ``T^exponent``."""
        offset = _to_half_units(exponent)
        return LaurentPoly(tuple((e + offset, c) for e, c in self.terms))

    def inverted(self) -> "LaurentPoly":
        """Substitute ``T -> 1/T``."""
        return LaurentPoly(tuple((-e, c) for e, c in self.terms))

    def exact_divide(self, divisor: "LaurentPoly") -> "LaurentPoly":
        """Return the quotient ``self / divisor`` in Z[T, 1/T].

        Raises
        ------
        ZeroDivisionError
            if the divisor is zero.
        ArithmeticError
            if the division is not exact.
        """
        if not divisor:
            raise ZeroDivisionError("division by the zero polynomial")
        if not self:
            return LaurentPoly()

        offset = self.terms[0][0] - divisor.terms[0][0]
        if offset % GRAIN:
            raise exceptions.GrainError("dividend and divisor are in different grains")

        shift_self, dense_self = self.to_dup()
        shift_divisor, dense_divisor = divisor.to_dup()
        try:
            quotient = _dense.exquo(dense_self, dense_divisor)
        except ExactQuotientFailed as e:
            raise ArithmeticError(f"{divisor} does not divide {self}") from e

        return LaurentPoly.from_dup(quotient, shift_self - shift_divisor)

    # --- conversions ----------------------------------------------------------------------------

    def to_dup(self) -> t.Tuple[int, _dense.Dup]:
        """Return ``(shift, f)`` with ``self = T^shift * f`` and f in Z[T] with f(0) != 0.

        Raises
        ------
        pertalex.exceptions.GrainError
            if self has half-integer exponents.
        """
        self._require_integral("to_dup")
        if not self.terms:
            return 0, []
        shift = self.terms[0][0] // GRAIN
        return shift, _dense.from_coefficients({e // GRAIN - shift: c for e, c in self.terms})

    def to_dup_half(self) -> t.Tuple[int, _dense.Dup]:
        """Like ``to_dup`` but returns the shift in half units, allowing one odd grain.

        Raises
        ------
        pertalex.exceptions.GrainError
            if the exponents mix integer and half-integer values.
        """
        if not self.terms:
            return 0, []
        base = self.terms[0][0]
        if any((e - base) % GRAIN for e, _ in self.terms):
            raise exceptions.GrainError(f"{self} mixes integer and half-integer exponents")
        return base, _dense.from_coefficients({(e - base) // GRAIN: c for e, c in self.terms})

    def evaluate(self, value: Number) -> Number:
        """Evaluate at T = value (exact for int/Fraction input, floating for float input).

        Raises
        ------
        pertalex.exceptions.GrainError
            if self has half-integer exponents.
        ZeroDivisionError
            if value is zero and self has negative exponents.
        """
        self._require_integral("evaluate")
        if isinstance(value, int):
            value = Fraction(value)
        total = value * 0
        for exponent, coefficient in self.integer_terms().items():
            total += coefficient * value**exponent
        return total

    def is_symmetric(self) -> bool:
        """True if ``self(T) == self(1/T)``."""
        return self.inverted() == self

    def symmetrized(self) -> "LaurentPoly":
        """Multiply by the power of T that centers the exponent range at 0.

        Raises
        ------
        pertalex.exceptions.GrainError
            if centering would require quarter exponents.
        """
        if not self.terms:
            return self
        span = self.terms[0][0] + self.terms[-1][0]
        if span % 2:
            raise exceptions.GrainError(f"{self} cannot be centered on the half-integer grain")
        return LaurentPoly(tuple((e - span // 2, c) for e, c in self.terms))

    def asdict(self) -> dict:
        """Export self as a JSON-compatible dict.

        Returns
        -------
        dict_repr: dict
            ``{"terms": [[exponent_num, exponent_den, coefficient], ...]}`` in ascending
            exponent order with exponent_den 1 or 2.
        """
        terms = []
        for half_exponent, coefficient in self.terms:
            if half_exponent % GRAIN == 0:
                terms.append([half_exponent // GRAIN, 1, coefficient])
            else:
                terms.append([half_exponent, GRAIN, coefficient])
        return {"terms": terms}

    def to_str(self, variable: str = "T") -> str:
        """Render as sparse ``coeff*T^exp`` terms in ascending exponent order."""
        if not self.terms:
            return "0"

        rendered = ""
        for half_exponent, coefficient in self.terms:
            magnitude = abs(coefficient)

            if half_exponent == 0:
                body = str(magnitude)
            else:
                if half_exponent == GRAIN:
                    power = variable
                elif half_exponent % GRAIN == 0:
                    power = f"{variable}^{half_exponent // GRAIN}"
                else:
                    power = f"{variable}^({half_exponent}/{GRAIN})"
                body = power if magnitude == 1 else f"{magnitude}*{power}"

            if not rendered:
                rendered = ("-" if coefficient < 0 else "") + body
            else:
                rendered += (" - " if coefficient < 0 else " + ") + body
        return rendered

    def __str__(self) -> str:
        return self.to_str()

    def __repr__(self) -> str:
        return f"LaurentPoly('{self}')"

    def _require_nonzero(self, what: str):
        if not self.terms:
            raise ValueError(f"{what} is undefined for the zero polynomial")

    def _require_integral(self, what: str):
        if not self.is_integral:
            raise exceptions.GrainError(f"{what} requires integer exponents, got {self}")


def poly_arith(a: LaurentPoly, b: LaurentPoly, kind: str) -> LaurentPoly:
    """Exact ring arithmetic on two Laurent polynomials.

    Parameters
    ----------
    a: LaurentPoly
        Left operand.
    b: LaurentPoly
        Right operand.
    kind: str
        One of "add", "sub" and "mul".

    Returns
    -------
    result: LaurentPoly
        The canonical result.

    Raises
    ------
    ValueError
        if kind is not supported.
    """
    if kind == "add":
        return a + b
    elif kind == "sub":
        return a - b
    elif kind == "mul":
        return a * b
    raise ValueError(f"unsupported kind {kind!r}, expected 'add', 'sub' or 'mul'")


def poly_exact_divide(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    """Exact quotient ``a / b`` in Z[T, 1/T]; raises ArithmeticError when not exact."""
    return a.exact_divide(b)


def _to_half_units(exponent: Exponent) -> int:
    doubled = Fraction(exponent) * GRAIN
    if doubled.denominator != 1:
        raise exceptions.GrainError(f"exponent {exponent} is not a multiple of 1/{GRAIN}")
    return int(doubled)


def _coerce(value) -> t.Union[LaurentPoly, t.Any]:
    if isinstance(value, LaurentPoly):
        return value
    if isinstance(value, int):
        return LaurentPoly.constant(value)
    return NotImplemented


T = LaurentPoly.monomial(1)
ZERO = LaurentPoly()
ONE = LaurentPoly.constant(1)
