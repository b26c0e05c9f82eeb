# Copyright The pertalex contributors
# SPDX-License-Identifier: Apache-2.0

import os
import sys
from fractions import Fraction
from pathlib import Path

import pytest

sys.path.insert(1, str(Path(__file__).parent.parent.parent.parent))

from pertalex.braid import full_twist_limit, full_twist_power
from pertalex.diagram import VertexBlock, compile_closure
from pertalex.markov import chain_from_layout, infinite_twist_vertex
from pertalex.ring import ONE, RatFun, T


def test_two_strands():
    vertex = infinite_twist_vertex(2)

    assert vertex.incoming == (1, 2)
    assert vertex.outgoing == (3, 4)
    for source in (1, 2):
        assert vertex.weight(source, 3) == RatFun(ONE, 1 + T)
        assert vertex.weight(source, 4) == RatFun(T, 1 + T)


def test_rows_sum_to_one():
    for n in range(2, 6):
        vertex = infinite_twist_vertex(n)
        for source in vertex.incoming:
            total = RatFun(0)
            for target in vertex.outgoing:
                total = total + vertex.weight(source, target)
            assert total == RatFun(1)


def test_weights_at_one():
    for n in range(2, 6):
        vertex = infinite_twist_vertex(n)
        for weight in vertex.transitions.values():
            assert weight.evaluate(1) == Fraction(1, n)


def test_weights_are_the_full_twist_limit():
    vertex = infinite_twist_vertex(3)
    limit = full_twist_limit(3)

    for i in range(3):
        for j in range(3):
            assert vertex.weight(i + 1, 4 + j) == limit[i, j]


def test_absorbs_a_full_twist():
    for n in range(2, 5):
        limit = full_twist_limit(n)

        assert limit @ full_twist_power(n, 1) @ limit == limit


def test_too_few_strands():
    with pytest.raises(ValueError):
        infinite_twist_vertex(1)


def test_spliced_into_closure():
    layout = compile_closure(2, [1, VertexBlock(1, 2), 1, 1, VertexBlock(1, 2)], cut=1)
    chain = chain_from_layout(layout)

    assert len(chain) == 11
    assert chain.weight(7, 8) == RatFun(ONE, 1 + T)
    assert chain.weight(2, 3) == RatFun(T, 1 + T)
    for row, total in enumerate(chain.matrix().row_sums(), start=1):
        assert total == (RatFun(0) if row == layout.exit else RatFun(1))


# Executes the test if the file is called
if __name__ == "__main__":
    os.system("clear")
    pytest.main([__file__, "--disable-pytest-warnings", "--cache-clear"])
