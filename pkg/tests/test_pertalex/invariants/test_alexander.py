# Copyright The pertalex contributors
# SPDX-License-Identifier: Apache-2.0

import os
import random
import sys
from pathlib import Path

import pytest

sys.path.insert(1, str(Path(__file__).parent.parent.parent.parent))

import pertalex
from pertalex.braid import BraidWord, burau_alexander
from pertalex.diagram import Crossing, UprightDiagram, braid_closure_to_long
from pertalex.invariants import alexander
from pertalex.ring import ONE, LaurentPoly, T


def kink() -> UprightDiagram:
    return UprightDiagram(
        strand_count=3, crossings=(Crossing(1, 1, 2, 2, 3),), rotations={2: -1}
    )


def test_unknot():
    assert alexander(kink()) == ONE
    assert alexander(kink().mirror()) == ONE
    assert alexander(UprightDiagram(strand_count=1)) == ONE


def test_trefoil():
    expected = T - 1 + T**-1

    assert alexander(braid_closure_to_long(BraidWord(2, (1, 1, 1)))) == expected
    assert alexander(braid_closure_to_long(BraidWord(2, (-1, -1, -1)))) == expected


def test_torus_knots():
    assert alexander(braid_closure_to_long(BraidWord(2, (1,) * 5))) == LaurentPoly.from_dict(
        {2: 1, 1: -1, 0: 1, -1: -1, -2: 1}
    )
    assert alexander(braid_closure_to_long(BraidWord(3, (1, 2) * 4))) == LaurentPoly.from_dict(
        {3: 1, 2: -1, 0: 1, -2: -1, -3: 1}
    )


def test_figure_eight():
    d = braid_closure_to_long(BraidWord(3, (1, -2, 1, -2)))

    assert alexander(d) == -T + 3 - T**-1


def test_agrees_with_burau():
    rng = random.Random(3)
    checked = 0
    while checked < 15:
        n = rng.randint(2, 4)
        letters = [rng.choice([-1, 1]) * rng.randint(1, n - 1) for _ in range(rng.randint(1, 7))]
        word = BraidWord(n, tuple(letters))
        if not word.is_knot_closure:
            continue
        for cut in range(1, n + 1):
            polynomial = alexander(braid_closure_to_long(word, cut))
            assert polynomial == burau_alexander(word)
            assert polynomial.is_symmetric()
            assert polynomial.evaluate(1) == 1
        checked += 1


def test_inconsistent_rotations():
    # A kink without its turn leaves det(I - A) = 1 shifted by half a power of T.
    d = UprightDiagram(strand_count=3, crossings=(Crossing(1, 1, 2, 2, 3),))

    with pytest.raises(pertalex.GrainError):
        alexander(d)


# Executes the test if the file is called
if __name__ == "__main__":
    os.system("clear")
    pytest.main([__file__, "--disable-pytest-warnings", "--cache-clear"])
