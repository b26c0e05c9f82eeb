# Copyright The pertalex contributors
# SPDX-License-Identifier: Apache-2.0

import os
import sys
from fractions import Fraction
from pathlib import Path

import pytest

sys.path.insert(1, str(Path(__file__).parent.parent.parent.parent))

from pertalex.markov import walk_determinant
from pertalex.ring import ONE, LaurentPoly, RatFun, T
from pertalex.twisting import (
    TwistedFamily,
    alexander_limit,
    build_d_infinity,
    build_d_tau_infinity,
    growth_rate,
    normalization_exponent,
    twist_determinant_law,
)

T2_FAMILY = TwistedFamily.fromdict({"m": 2, "prefix": [1], "suffix": [], "slot": [1, 2]})
T3_FAMILY = TwistedFamily.fromdict({"m": 3, "prefix": [1, 2], "suffix": [], "slot": [1, 3]})
WIDE_FAMILY = TwistedFamily.fromdict({"m": 3, "prefix": [-1, 2], "suffix": [], "slot": [2, 3]})


def test_d_infinity_of_two_strands():
    chain = build_d_infinity(T2_FAMILY)

    assert len(chain) == 5
    assert chain.weight(1, 2) == RatFun(T)
    assert chain.weight(3, 4) == RatFun(1)
    assert chain.weight(4, 5) == RatFun(ONE, 1 + T)
    assert chain.weight(4, 3) == RatFun(T, 1 + T)
    assert chain.weight(2, 3) == RatFun(T, 1 + T)
    assert walk_determinant(chain) == RatFun(ONE, 1 + T)


def test_d_infinity_of_three_strands():
    chain = build_d_infinity(T3_FAMILY)
    norm = 1 + T + T**2
    weights = set(chain.transitions.values())

    for numerator in [ONE, T, T**2]:
        assert RatFun(numerator, norm) in weights
    for row, total in enumerate(chain.matrix().row_sums(), start=1):
        assert total == (RatFun(0) if row in chain.outgoing else RatFun(1))


def test_d_tau_infinity():
    chain, twist = build_d_tau_infinity(T2_FAMILY)

    assert len(chain) == 11
    assert len(twist) == 2
    assert all(c.sign == 1 for c in twist)

    chain, twist = build_d_tau_infinity(T3_FAMILY)

    assert len(twist) == 6
    assert all(c.sign == 1 for c in twist)


def test_alexander_limit():
    assert alexander_limit(T2_FAMILY) == RatFun(ONE, 1 + T)
    assert alexander_limit(T2_FAMILY).evaluate(1) == Fraction(1, 2)

    for f in [T3_FAMILY, WIDE_FAMILY, T2_FAMILY.mirror()]:
        limit = alexander_limit(f)

        assert abs(limit.evaluate(1)) == Fraction(1, f.width)
        assert not limit.is_polynomial


def test_growth_rate():
    assert growth_rate(T2_FAMILY) == RatFun(-1, (1 + T) ** 2)
    assert growth_rate(T2_FAMILY).evaluate(1) == Fraction(-1, 4)


def test_growth_rate_at_one():
    for f in [T3_FAMILY, WIDE_FAMILY, T2_FAMILY.mirror()]:
        rate = growth_rate(f)
        n = f.width

        assert abs(rate.evaluate(1)) == Fraction(n - 1, 2 * n)
        assert not rate.is_polynomial


def test_twist_determinant_law():
    for f in [T2_FAMILY, T3_FAMILY, WIDE_FAMILY]:
        det_tau, det_infinity, alpha = twist_determinant_law(f)

        assert det_tau == det_infinity
        assert alpha == Fraction(-normalization_exponent(f), 2)
        assert det_tau == alexander_limit(f) * RatFun(LaurentPoly.monomial(alpha))

    assert twist_determinant_law(T2_FAMILY)[2] == 0


# Executes the test if the file is called
if __name__ == "__main__":
    os.system("clear")
    pytest.main([__file__, "--disable-pytest-warnings", "--cache-clear"])
