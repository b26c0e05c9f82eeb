# Copyright The pertalex contributors
# SPDX-License-Identifier: Apache-2.0
"""Perturbed Alexander invariant of knots, computed through tangle Markov chains."""

from .corpus import load_corpus
from .exceptions import *
from .load import load, load_dict
from .save import save
from .validate import validate
from .verify import verify

__version__ = "0.1.0"
