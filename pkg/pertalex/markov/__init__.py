# Copyright The pertalex contributors
# SPDX-License-Identifier: Apache-2.0
"""Tangle Markov chains, Green's matrices, contraction and brute-force oracles."""

from .contraction import braid_region, contract, det_after_contract, region_has_cycles
from .greens import greens_adjugate, greens_entry, greens_matrix, identity_minus, walk_determinant
from .multicycle import (
    Multicycle,
    bad_multicycle_sum,
    cartier_foata_check,
    enumerate_region_cycles,
    enumerate_simple_multicycles,
    multicycle_sum,
)
from .oracles import numeric_matrix, walk_sum_oracle
from .tangle_chain import TangleChain
from .twist_vertex import chain_from_layout, infinite_twist_vertex
