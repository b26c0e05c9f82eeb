# Copyright The pertalex contributors
# SPDX-License-Identifier: Apache-2.0
"""Exact arithmetic over Z[T, 1/T], Z(T), truncated Laurent series and matrices over Z(T)."""

from .laurent_poly import ONE, T, ZERO, LaurentPoly, poly_arith, poly_exact_divide
from .rat_fun import RatFun, ratfun_canonicalize
from .rat_matrix import RatMatrix, mat_adjugate, mat_adjugate_and_det, mat_det, mat_inverse
from .truncated_series import TruncatedSeries, series_expand
