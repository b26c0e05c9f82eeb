# Copyright The pertalex contributors
# SPDX-License-Identifier: Apache-2.0

import os
import random
import sys
from fractions import Fraction
from pathlib import Path

import pytest

sys.path.insert(1, str(Path(__file__).parent.parent.parent.parent))

import pertalex
from pertalex.ring import ONE, ZERO, LaurentPoly, RatFun, T, ratfun_canonicalize


def random_nonzero_poly(rng: random.Random) -> LaurentPoly:
    while True:
        p = LaurentPoly.from_dict({rng.randint(-2, 3): rng.randint(-3, 3) for _ in range(3)})
        if p:
            return p


def test_common_factor_cancels():
    f = ratfun_canonicalize(1 - T**2, 1 - T)

    assert f == RatFun(1 + T)
    assert f.is_polynomial
    assert f.as_poly() == 1 + T


def test_sign_normalization():
    assert ratfun_canonicalize(T - 1, T + 1) == ratfun_canonicalize(1 - T, -1 - T)
    assert ratfun_canonicalize(ONE, -1 - T).num == LaurentPoly.constant(-1)
    assert ratfun_canonicalize(ONE, -1 - T).den == 1 + T


def test_geometric_reduction():
    f = ratfun_canonicalize(1 - T, 1 - T**3)

    assert f.num == ONE
    assert f.den == 1 + T + T**2


def test_denominator_has_minimal_exponent_zero():
    f = RatFun(ONE, T**2 + T**3)

    assert f.num == T**-2
    assert f.den == 1 + T


def test_monomial_denominator_content():
    f = RatFun(2 * T**3, 4 * T)

    assert f.num == T**2
    assert f.den == LaurentPoly.constant(2)


def test_zero():
    assert RatFun(ZERO, 1 + T) == RatFun(ZERO)
    assert not RatFun(ZERO, 5 * T)


def test_zero_denominator():
    with pytest.raises(pertalex.ZeroDenominatorError):
        ratfun_canonicalize(ONE, ZERO)

    with pytest.raises(ZeroDivisionError):
        RatFun(ONE) / RatFun(ZERO)


def test_common_factor_random():
    rng = random.Random(7)
    for _ in range(30):
        p, q, r = (random_nonzero_poly(rng) for _ in range(3))
        assert ratfun_canonicalize(p * q, r * q) == ratfun_canonicalize(p, r)


def test_field_arithmetic():
    a = RatFun(ONE, 1 + T)
    b = RatFun(T, 1 + T)

    assert a + b == RatFun(ONE)
    assert a - b == RatFun(1 - T, 1 + T)
    assert a * b == RatFun(T, 1 + 2 * T + T**2)
    assert a / b == RatFun(T**-1)
    assert a**-2 == RatFun((1 + T) ** 2)
    assert 1 - a == b


def test_evaluate():
    f = RatFun(ONE, 1 + T)

    assert f.evaluate(1) == Fraction(1, 2)
    assert f.evaluate(Fraction(1, 3)) == Fraction(3, 4)
    assert f.evaluate(0.5) == pytest.approx(2 / 3)

    with pytest.raises(ZeroDivisionError):
        f.evaluate(-1)


def test_half_grain_numerator():
    root = LaurentPoly.monomial(Fraction(1, 2))
    f = RatFun(root, 1 + T)

    assert f.num == root
    assert (f * f) == RatFun(T, 1 + 2 * T + T**2)


def test_to_str():
    assert str(RatFun(ONE, 1 + T)) == "1 / (1 + T)"
    assert str(RatFun(LaurentPoly.constant(-1), (1 + T) ** 2)) == "-1 / (1 + 2*T + T^2)"
    assert str(RatFun(1 - T)) == "1 - T"


def test_asdict():
    f = RatFun(T, 1 + T)

    assert f.asdict() == {"num": {"terms": [[1, 1, 1]]}, "den": {"terms": [[0, 1, 1], [1, 1, 1]]}}
    assert RatFun.fromdict(f.asdict()) == f


# Executes the test if the file is called
if __name__ == "__main__":
    os.system("clear")
    pytest.main([__file__, "--disable-pytest-warnings", "--cache-clear"])
