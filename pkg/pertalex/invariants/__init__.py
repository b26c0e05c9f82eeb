# Copyright The pertalex contributors
# SPDX-License-Identifier: Apache-2.0
"""Alexander polynomial, perturbed Alexander invariant rho_1 and the Conway-type invariants."""

from .alexander import alexander, normalization_exponent
from .conway import conway, delta1, rho1_reduced, substitute_z
from .report import (
    KnotInvariants,
    PositivityReport,
    compute_invariants,
    mirror_law_holds,
    positivity_report,
)
from .rho1 import doubled_r1_tilde, doubled_rotation_tilde, r1_crossing, rho1, rho1_rational
