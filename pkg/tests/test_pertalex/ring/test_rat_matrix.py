# Copyright The pertalex contributors
# SPDX-License-Identifier: Apache-2.0

import os
import random
import sys
from pathlib import Path

import pytest

sys.path.insert(1, str(Path(__file__).parent.parent.parent.parent))

import pertalex
from pertalex.ring import (
    ONE,
    LaurentPoly,
    RatFun,
    RatMatrix,
    T,
    mat_adjugate,
    mat_det,
    mat_inverse,
)
from pertalex.ring import _dense, _elimination


def random_matrix(rng: random.Random, size: int) -> RatMatrix:
    return RatMatrix.from_rows(
        [
            [
                LaurentPoly.from_dict({rng.randint(-1, 2): rng.randint(-2, 2) for _ in range(2)})
                for _ in range(size)
            ]
            for _ in range(size)
        ]
    )


def random_invertible_matrix(rng: random.Random, size: int) -> RatMatrix:
    while True:
        m = random_matrix(rng, size)
        if mat_det(m):
            return m


def kink_transition_matrix() -> RatMatrix:
    return RatMatrix.from_rows([[0, T, 1 - T], [0, 0, 1], [0, 0, 0]])


def test_shape_checks():
    with pytest.raises(pertalex.ShapeError):
        RatMatrix(2, 2, (1, 2, 3))

    with pytest.raises(pertalex.ShapeError):
        mat_det(RatMatrix.zeros(2, 3))

    with pytest.raises(pertalex.ShapeError):
        RatMatrix.identity(2) @ RatMatrix.identity(3)


def test_identity():
    identity = RatMatrix.identity(3)

    assert mat_det(identity) == RatFun(ONE)
    assert mat_adjugate(identity) == identity
    assert mat_inverse(identity) == identity


def test_kink_determinant_and_greens_matrix():
    i_minus_a = RatMatrix.identity(3) - kink_transition_matrix()
    greens = mat_inverse(i_minus_a)

    assert mat_det(i_minus_a) == RatFun(ONE)
    assert greens[0, 1] == RatFun(T)
    assert greens[0, 2] == RatFun(ONE)
    assert greens[1, 2] == RatFun(ONE)
    assert greens[2, 0] == RatFun(LaurentPoly())


def test_kink_adjugate_multiplies_back():
    i_minus_a = RatMatrix.identity(3) - kink_transition_matrix()

    assert i_minus_a @ mat_adjugate(i_minus_a) == RatMatrix.identity(3) * mat_det(i_minus_a)


def test_adjugate_two_by_two():
    a, b, c, d = 1 + T, T**2, 3 - T, T**-1
    m = RatMatrix.from_rows([[a, b], [c, d]])

    assert mat_adjugate(m) == RatMatrix.from_rows([[d, -b], [-c, a]])


def test_singular_matrix():
    m = RatMatrix.from_rows([[1 + T, 1 + T], [1, 1]])

    assert not mat_det(m)
    assert mat_adjugate(m) == RatMatrix.from_rows([[1, -1 - T], [-1, 1 + T]])

    with pytest.raises(pertalex.SingularMatrixError):
        mat_inverse(m)


def test_rational_entries():
    m = RatMatrix.from_rows([[RatFun(ONE, 1 + T), RatFun(T, 1 + T)], [1, 0]])

    assert mat_det(m) == RatFun(-T, 1 + T)
    assert m @ mat_inverse(m) == RatMatrix.identity(2)


def test_determinant_matches_cofactor_expansion():
    rng = random.Random(11)
    for size in (3, 5, 6):
        lifted = [
            [
                _dense.from_coefficients({rng.randint(0, 2): rng.randint(-2, 2) for _ in range(2)})
                for _ in range(size)
            ]
            for _ in range(size)
        ]
        assert _elimination.bareiss_determinant(lifted) == _elimination.cofactor_determinant(
            lifted
        )


def test_determinant_is_multiplicative():
    rng = random.Random(3)
    for size in (2, 4, 5):
        a, b = random_matrix(rng, size), random_matrix(rng, size)
        assert mat_det(a @ b) == mat_det(a) * mat_det(b)


def test_inverse_random():
    rng = random.Random(5)
    for size in range(1, 7):
        m = random_invertible_matrix(rng, size)
        assert mat_inverse(m) @ m == RatMatrix.identity(size)


def test_determinant_of_adjugate():
    rng = random.Random(13)
    for size in range(1, 5):
        m = random_matrix(rng, size)
        assert mat_det(mat_adjugate(m)) == mat_det(m) ** (size - 1)


def test_block_triangular_determinant():
    top = RatMatrix.from_rows([[1 + T, 2], [T, 1]])
    bottom = RatMatrix.from_rows([[T**2, 1], [1, 1]])
    m = RatMatrix.from_rows(
        [
            list(top.row(0)) + [T, 5],
            list(top.row(1)) + [1, T**-1],
            [0, 0] + list(bottom.row(0)),
            [0, 0] + list(bottom.row(1)),
        ]
    )

    assert mat_det(m) == mat_det(top) * mat_det(bottom)


def test_asdict():
    m = RatMatrix.from_rows([[RatFun(ONE, 1 + T), 0]])

    assert m.asdict() == {
        "rows": 1,
        "cols": 2,
        "entries": [
            [
                {"num": {"terms": [[0, 1, 1]]}, "den": {"terms": [[0, 1, 1], [1, 1, 1]]}},
                {"num": {"terms": []}, "den": {"terms": [[0, 1, 1]]}},
            ]
        ],
    }
    assert RatMatrix.fromdict(m.asdict()) == m


# Executes the test if the file is called
if __name__ == "__main__":
    os.system("clear")
    pytest.main([__file__, "--disable-pytest-warnings", "--cache-clear"])
