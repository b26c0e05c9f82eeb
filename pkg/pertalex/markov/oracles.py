# Copyright The pertalex contributors
# SPDX-License-Identifier: Apache-2.0

import numpy as np

from .tangle_chain import State, TangleChain


def numeric_matrix(m: TangleChain, at: float) -> np.ndarray:
    """Transition matrix of a chain evaluated at ``T = at``."""
    values = np.zeros((len(m), len(m)))
    for (source, target), weight in m.transitions.items():
        values[m.index(source), m.index(target)] = float(weight.evaluate(at))
    return values


def walk_sum_oracle(m: TangleChain, source: State, target: State, max_len: int, at: float) -> float:
    """Sum of the weights of all walks from source to target with at most max_len steps.

    Parameters
    ----------
    m: pertalex.markov.TangleChain
        The chain.
    source, target: state
        End points of the walks.
    max_len: int
        Largest number of transitions in a walk.
    at: float
        Evaluation point for T. Near 1 the sum converges to the Green's function.

    Returns
    -------
    total: float
        ``sum_{k=0}^{max_len} (A^k)[source, target]`` at ``T = at``.
    """
    matrix = numeric_matrix(m, at)
    row = np.zeros(len(m))
    row[m.index(source)] = 1.0

    column = m.index(target)
    total = row[column]
    for _ in range(max_len):
        row = row @ matrix
        total += row[column]
    return float(total)
