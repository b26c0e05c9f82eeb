# Copyright The pertalex contributors
# SPDX-License-Identifier: Apache-2.0
"""Twisted families of knots and the limits of their invariants under full twisting."""

from .family import TwistedFamily, diagram_at
from .growth import (
    GrowthReport,
    alexander_convergence,
    convergence_report,
    d_t_empirical,
    normalized_alexander,
    rho1_at,
)
from .limits import (
    alexander_limit,
    build_d_infinity,
    build_d_tau_infinity,
    growth_rate,
    layout_infinity,
    layout_tau_infinity,
    normalization_exponent,
    twist_determinant_law,
)
