# Copyright The pertalex contributors
# SPDX-License-Identifier: Apache-2.0

import os
import sys
from pathlib import Path

import pytest

sys.path.insert(1, str(Path(__file__).parent.parent.parent.parent))

import pertalex
from pertalex.braid import BraidWord


def test_from_text():
    word = BraidWord.from_text("1 -2  1", 3)

    assert word.letters == (1, -2, 1)
    assert word.strand_count == 3
    assert BraidWord.from_text("1 1 1").strand_count == 2
    assert BraidWord.from_text("").letters == ()


def test_invalid_letters():
    with pytest.raises(pertalex.InvalidBraidError):
        BraidWord(2, (2,))

    with pytest.raises(pertalex.InvalidBraidError):
        BraidWord(3, (0,))

    with pytest.raises(pertalex.InvalidBraidError):
        BraidWord(1, ())

    with pytest.raises(pertalex.InvalidBraidError):
        BraidWord.from_text("1 x", 2)


def test_inverse_and_mirror():
    word = BraidWord(3, (1, -2, 2, 2))

    assert word.inverse().letters == (-2, -2, 2, -1)
    assert word.mirror().letters == (-1, 2, -2, -2)
    assert word.writhe == 2
    assert word.mirror().writhe == -2


def test_concatenation_and_powers():
    word = BraidWord(3, (1, 2))

    assert (word + word).letters == (1, 2, 1, 2)
    assert (word * 3).letters == (1, 2) * 3
    assert (word * -1) == word.inverse()

    with pytest.raises(pertalex.InvalidBraidError):
        word + BraidWord(2, (1,))


def test_shifted():
    assert BraidWord(2, (1, -1)).shifted(2, 4) == BraidWord(4, (3, -3))


def test_permutation():
    assert BraidWord(3, (1, 2)).permutation() == (2, 0, 1)
    assert BraidWord(2, (1, 1)).permutation() == (0, 1)


def test_knot_closure():
    assert BraidWord(2, (1, 1, 1)).is_knot_closure
    assert BraidWord(3, (1, 2, 1, 2)).is_knot_closure
    assert not BraidWord(2, (1, 1)).is_knot_closure
    assert not BraidWord(3, (1,)).is_knot_closure
    assert len(BraidWord(3, (1,)).closure_components()) == 2


def test_asdict():
    word = BraidWord(2, (1, 1, 1))

    assert word.asdict() == {"n": 2, "word": [1, 1, 1]}
    assert BraidWord.fromdict(word.asdict()) == word
    assert str(word) == "1 1 1"


# Executes the test if the file is called
if __name__ == "__main__":
    os.system("clear")
    pytest.main([__file__, "--disable-pytest-warnings", "--cache-clear"])
