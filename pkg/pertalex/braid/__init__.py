# Copyright The pertalex contributors
# SPDX-License-Identifier: Apache-2.0
"""Braid words, the unreduced Burau representation and full twists."""

from .braid_word import BraidWord
from .burau import BurauMatrix, burau, burau_alexander, generator_matrix
from .full_twist import full_twist_limit, full_twist_power, full_twist_word, p_nk, quantum_integer
