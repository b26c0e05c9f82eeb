# Copyright The pertalex contributors
# SPDX-License-Identifier: Apache-2.0

import os
import sys
from pathlib import Path

import pytest

sys.path.insert(1, str(Path(__file__).parent.parent.parent.parent))

import pertalex
from pertalex.diagram import (
    Crossing,
    UprightDiagram,
    rotation_total,
    transition_matrix,
    validate_diagram,
    writhe,
)
from pertalex.ring import RatMatrix, T


def kink() -> UprightDiagram:
    return UprightDiagram(
        strand_count=3, crossings=(Crossing(1, 1, 2, 2, 3),), rotations={2: -1}
    )


def test_kink_is_valid():
    validate_diagram(kink())


def test_empty_diagram_is_valid():
    empty = UprightDiagram(strand_count=1)

    validate_diagram(empty)
    assert empty.entry == empty.exit == 1
    assert writhe(empty) == 0
    assert rotation_total(empty) == 0


def test_label_out_of_range():
    diagram = UprightDiagram(strand_count=3, crossings=(Crossing(1, 1, 99, 2, 3),))

    with pytest.raises(pertalex.InvalidDiagramError):
        validate_diagram(diagram)


def test_label_reused_in_same_role():
    diagram = UprightDiagram(
        strand_count=5, crossings=(Crossing(1, 1, 2, 3, 4), Crossing(1, 2, 3, 4, 5))
    )

    with pytest.raises(pertalex.InvalidDiagramError):
        validate_diagram(diagram)


def test_closed_component_is_rejected():
    # Strands 2 and 3 form a loop through two crossings that the walk from 1 never reaches.
    diagram = UprightDiagram(
        strand_count=5,
        crossings=(Crossing(1, 1, 2, 4, 3), Crossing(1, 4, 3, 5, 2)),
    )

    with pytest.raises(pertalex.InvalidDiagramError):
        validate_diagram(diagram)


def test_same_strand_on_both_arcs():
    diagram = UprightDiagram(strand_count=3, crossings=(Crossing(1, 1, 1, 2, 3),))

    with pytest.raises(pertalex.InvalidDiagramError):
        diagram.validate()


def test_kink_transition_matrix():
    assert transition_matrix(kink()) == RatMatrix.from_rows(
        [[0, T, 1 - T], [0, 0, 1], [0, 0, 0]]
    )


def test_negative_kink_transition_matrix():
    assert transition_matrix(kink().mirror()) == RatMatrix.from_rows(
        [[0, T**-1, 1 - T**-1], [0, 0, 1], [0, 0, 0]]
    )


def test_kink_writhe_and_rotation():
    d = kink()

    assert d.writhe == 1
    assert d.rotation_total == -1
    assert d.rotation(1) == d.rotation(3) == 0
    assert d.rotation(2) == -1


def test_mirror():
    d = kink().mirror()

    assert writhe(d) == -1
    assert rotation_total(d) == 1


def test_asdict():
    d = kink()

    assert d.asdict() == {
        "strands": 3,
        "entry": 1,
        "exit": 3,
        "crossings": [{"sign": 1, "i": 1, "j": 2, "ip": 2, "jp": 3}],
        "rotations": {"2": -1},
    }
    assert UprightDiagram.fromdict(d.asdict()) == d


# Executes the test if the file is called
if __name__ == "__main__":
    os.system("clear")
    pytest.main([__file__, "--disable-pytest-warnings", "--cache-clear"])
