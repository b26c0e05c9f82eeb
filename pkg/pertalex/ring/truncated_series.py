# Copyright The pertalex contributors
# SPDX-License-Identifier: Apache-2.0

import typing as t
from dataclasses import dataclass

from .. import exceptions
from .laurent_poly import LaurentPoly
from .rat_fun import RatFun


@dataclass(frozen=True)
class TruncatedSeries:
    """A Laurent series in T with integer coefficients, known through degree r0.

    Parameters
    ----------
    min_exp: int
        Exponent of the first stored coefficient.
    coefficients: tuple of int
        Coefficients of ``T^min_exp, ..., T^r0``.
    r0: int
        Truncation degree. Nothing is claimed about coefficients above it.
    """

    min_exp: int
    coefficients: t.Tuple[int, ...]
    r0: int

    def coeff(self, exponent: int) -> int:
        """Return the coefficient of ``T^exponent`` for exponent <= r0."""
        if exponent > self.r0:
            raise ValueError(f"coefficient of T^{exponent} is beyond the cutoff {self.r0}")
        index = exponent - self.min_exp
        if 0 <= index < len(self.coefficients):
            return self.coefficients[index]
        return 0

    def to_poly(self) -> LaurentPoly:
        """Return the truncation as a Laurent polynomial."""
        return LaurentPoly(
            tuple((2 * (self.min_exp + k), c) for k, c in enumerate(self.coefficients))
        )

    def agreement_depth(self, poly: LaurentPoly) -> int:
        """Return the largest r <= r0 such that poly and self agree in every degree up to r.

        Parameters
        ----------
        poly: pertalex.ring.LaurentPoly
            Polynomial with integer exponents.

        Returns
        -------
        depth: int
            r0 for agreement through the cutoff, otherwise one less than the lowest exponent where
            the coefficients differ.
        """
        terms = poly.integer_terms()
        lowest = min([self.min_exp] + list(terms))
        for exponent in range(lowest, self.r0 + 1):
            if terms.get(exponent, 0) != self.coeff(exponent):
                return exponent - 1
        return self.r0

    def asdict(self) -> dict:
        return {"min_exp": self.min_exp, "coefficients": list(self.coefficients), "r0": self.r0}

    def __str__(self) -> str:
        return f"{self.to_poly()} + O(T^{self.r0 + 1})"


def series_expand(f: RatFun, r0: int) -> TruncatedSeries:
    """Expand a rational function around T = 0 through degree r0.

    Parameters
    ----------
    f: pertalex.ring.RatFun
        Rational function with integer exponents.
    r0: int
        Highest degree to compute.

    Returns
    -------
    series: pertalex.ring.TruncatedSeries
        The unique Laurent series of f, truncated after ``T^r0``.

    Raises
    ------
    pertalex.exceptions.SeriesExpansionError
        if f has no expansion with integer coefficients in integer powers of T.
    """
    if not f:
        return TruncatedSeries(min_exp=0, coefficients=(), r0=r0)
    if not f.num.is_integral:
        raise exceptions.SeriesExpansionError(f"{f} has half-integer exponents")

    # The canonical denominator has minimal exponent 0.
    denominator = f.den.integer_terms()
    lead = denominator.get(0, 0)
    if lead == 0:
        raise exceptions.SeriesExpansionError(f"denominator of {f} vanishes at T = 0")

    numerator = f.num.integer_terms()
    start = min(numerator)
    count = r0 - start + 1

    coefficients: t.List[int] = []
    for k in range(max(count, 0)):
        remainder = numerator.get(start + k, 0)
        for i, d in denominator.items():
            if 0 < i <= k:
                remainder -= d * coefficients[k - i]
        quotient, rest = divmod(remainder, lead)
        if rest:
            raise exceptions.SeriesExpansionError(
                f"{f} has a non-integral coefficient at T^{start + k}"
            )
        coefficients.append(quotient)

    return TruncatedSeries(min_exp=start, coefficients=tuple(coefficients), r0=r0)
