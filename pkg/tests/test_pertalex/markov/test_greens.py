# Copyright The pertalex contributors
# SPDX-License-Identifier: Apache-2.0

import os
import sys
from pathlib import Path

import pytest

sys.path.insert(1, str(Path(__file__).parent.parent.parent.parent))

import pertalex
from pertalex.braid import BraidWord
from pertalex.diagram import Crossing, UprightDiagram, braid_closure_to_long
from pertalex.markov import (
    TangleChain,
    greens_adjugate,
    greens_entry,
    greens_matrix,
    identity_minus,
    walk_determinant,
    walk_sum_oracle,
)
from pertalex.ring import RatFun, RatMatrix, T


def kink_chain() -> TangleChain:
    return TangleChain.from_diagram(
        UprightDiagram(strand_count=3, crossings=(Crossing(1, 1, 2, 2, 3),), rotations={2: -1})
    )


def trefoil_chain() -> TangleChain:
    return TangleChain.from_diagram(braid_closure_to_long(BraidWord(2, (1, 1, 1))))


def test_no_crossings():
    chain = TangleChain.from_diagram(UprightDiagram(strand_count=1))

    assert greens_matrix(chain) == RatMatrix.identity(1)


def test_kink():
    chain = kink_chain()
    greens = greens_matrix(chain)

    assert greens_entry(chain, greens, 1, 3) == RatFun(1)
    assert greens_entry(chain, greens, 1, 2) == RatFun(T)
    assert greens_entry(chain, greens, 2, 1) == RatFun(0)
    assert walk_determinant(chain) == RatFun(1)


def test_trefoil_inverse():
    chain = trefoil_chain()
    greens = greens_matrix(chain)

    assert greens @ identity_minus(chain) == RatMatrix.identity(len(chain))
    assert walk_determinant(chain) == RatFun(1 - T + T**2)


def test_adjugate_route():
    chain = trefoil_chain()
    adjugate, determinant = greens_adjugate(chain)

    assert adjugate == greens_matrix(chain) * determinant


def test_exit_is_reached_with_certainty():
    # Every walk from the entry eventually leaves, so g(entry, exit) is 1.
    for letters, n in (((1, 1, 1), 2), ((1, -2, 1, -2), 3), ((1, 2, 1, 2), 3)):
        chain = TangleChain.from_diagram(braid_closure_to_long(BraidWord(n, letters)))
        greens = greens_matrix(chain)

        assert greens_entry(chain, greens, chain.incoming[0], chain.outgoing[0]) == RatFun(1)


def test_singular():
    chain = TangleChain(states=(1,), transitions={(1, 1): 1})

    with pytest.raises(pertalex.SingularMatrixError):
        greens_matrix(chain)


def test_walk_sum_kink():
    for at in (0.5, 0.9, 1.5):
        assert walk_sum_oracle(kink_chain(), 1, 3, 2, at) == pytest.approx(1.0)


def test_walk_sum_acyclic_is_exact():
    chain = kink_chain()
    greens = greens_matrix(chain)

    assert walk_sum_oracle(chain, 1, 2, 5, 0.7) == pytest.approx(
        greens_entry(chain, greens, 1, 2).evaluate(0.7)
    )


def test_walk_sum_trefoil_converges():
    chain = trefoil_chain()
    greens = greens_matrix(chain)

    for source, target in ((1, 7), (1, 4), (3, 5), (5, 2)):
        expected = greens_entry(chain, greens, source, target).evaluate(0.99)
        assert walk_sum_oracle(chain, source, target, 60, 0.99) == pytest.approx(
            expected, abs=1e-6
        )


# Executes the test if the file is called
if __name__ == "__main__":
    os.system("clear")
    pytest.main([__file__, "--disable-pytest-warnings", "--cache-clear"])
