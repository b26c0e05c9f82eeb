# Copyright The pertalex contributors
# SPDX-License-Identifier: Apache-2.0
"""Upright long knot diagrams and the braid closure compiler."""

from .compiler import (
    Block,
    ClosureLayout,
    PlacedVertex,
    VertexBlock,
    braid_closure_layout,
    braid_closure_to_long,
    compile_closure,
)
from .crossing import Crossing
from .transition import crossing_weights, transition_matrix
from .upright_diagram import UprightDiagram, rotation_total, validate_diagram, writhe
