# Copyright The pertalex contributors
# SPDX-License-Identifier: Apache-2.0

import os
import sys
from fractions import Fraction
from pathlib import Path

import pytest

sys.path.insert(1, str(Path(__file__).parent.parent.parent.parent))

import pertalex
from pertalex.ring import ONE, LaurentPoly, RatFun, T, series_expand


def test_geometric_series():
    series = series_expand(RatFun(ONE, 1 + T), 3)

    assert series.min_exp == 0
    assert series.coefficients == (1, -1, 1, -1)
    assert series.to_poly() == 1 - T + T**2 - T**3


def test_squared_denominator():
    series = series_expand(RatFun(LaurentPoly.constant(-1), (1 + T) ** 2), 3)
    assert series.coefficients == (-1, 2, -3, 4)


def test_polynomial_is_truncated():
    series = series_expand(RatFun(1 + 2 * T + 3 * T**5), 3)
    assert series.to_poly() == 1 + 2 * T


def test_negative_leading_exponent():
    series = series_expand(RatFun(T**-1, 1 - T), 2)

    assert series.min_exp == -1
    assert series.coefficients == (1, 1, 1, 1)
    assert series.coeff(-3) == 0


def test_longer_expansion_extends_shorter():
    f = RatFun(1 - T + 2 * T**3, 1 + T + T**2)
    short, long = series_expand(f, 4), series_expand(f, 9)

    for r in range(-2, 5):
        assert short.coeff(r) == long.coeff(r)


def test_coeff_beyond_cutoff():
    with pytest.raises(ValueError):
        series_expand(RatFun(ONE, 1 + T), 3).coeff(4)


def test_not_expandable():
    with pytest.raises(pertalex.SeriesExpansionError):
        series_expand(RatFun(ONE, 2 + T), 2)

    with pytest.raises(pertalex.SeriesExpansionError):
        series_expand(RatFun(LaurentPoly.monomial(Fraction(1, 2)), 1 + T), 2)


def test_zero():
    assert series_expand(RatFun(LaurentPoly()), 4).to_poly() == LaurentPoly()


def test_agreement_depth():
    series = series_expand(RatFun(LaurentPoly.constant(-1), (1 + T) ** 2), 6)

    assert series.agreement_depth(-1 + 2 * T - 2 * T**2 + 2 * T**3 - T**4) == 1
    assert series.agreement_depth(-1 + 2 * T - 3 * T**2 + 4 * T**3 - 5 * T**4 + 6 * T**5) == 5
    assert series.agreement_depth(series.to_poly() + T**9) == 6
    assert series.agreement_depth(T**-1 + series.to_poly()) == -2


# Executes the test if the file is called
if __name__ == "__main__":
    os.system("clear")
    pytest.main([__file__, "--disable-pytest-warnings", "--cache-clear"])
