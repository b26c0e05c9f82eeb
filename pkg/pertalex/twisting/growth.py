# Copyright The pertalex contributors
# SPDX-License-Identifier: Apache-2.0

import functools
import logging
import typing as t
from dataclasses import dataclass

from ..invariants import alexander, rho1
from ..ring import LaurentPoly, RatFun, TruncatedSeries, series_expand
from .family import TwistedFamily, diagram_at
from .limits import alexander_limit, growth_rate

logger = logging.getLogger(__name__)


@functools.lru_cache(maxsize=256)
def rho1_at(f: TwistedFamily, twists: int) -> LaurentPoly:
    """rho_1 of ``K_t``, cached per family and t."""
    return rho1(diagram_at(f, twists))


def d_t_empirical(f: TwistedFamily, twists: int) -> LaurentPoly:
    """Return ``T^(t n(n-1)) * (T^(n(n-1)) * rho_1(K_(t+1)) - rho_1(K_t))``.

    Raises
    ------
    ValueError
        if twists is negative.
    """
    if twists < 0:
        raise ValueError(f"the twist count must be nonnegative, got {twists}")
    step = f.twist_crossings
    difference = rho1_at(f, twists + 1).shift(step) - rho1_at(f, twists)
    return difference.shift(twists * step)


def normalized_alexander(f: TwistedFamily, twists: int) -> LaurentPoly:
    """Return ``T^(t n(n-1) / 2) * Delta(K_t)``, which converges to the Alexander limit."""
    return alexander(diagram_at(f, twists)).shift(twists * f.twist_crossings // 2)


@dataclass(frozen=True)
class GrowthReport:
    """Comparison of the rho_1 differences of a family with their limit.

    Parameters
    ----------
    family: pertalex.twisting.TwistedFamily
        The family.
    limit: pertalex.ring.RatFun
        The growth rate.
    series: pertalex.ring.TruncatedSeries
        Expansion of the limit through the cutoff.
    differences: tuple of pertalex.ring.LaurentPoly
        ``d_t`` for t = 0 .. t_max.
    depths: tuple of int
        Degree through which each ``d_t`` agrees with the series.
    rho1_values: tuple of pertalex.ring.LaurentPoly
        rho_1 of ``K_t`` for t = 0 .. t_max + 1.
    distinct_from: int
        Smallest t0 such that the computed ``rho_1(K_t)``, t >= t0, are pairwise distinct.
    """

    family: TwistedFamily
    limit: RatFun
    series: TruncatedSeries
    differences: t.Tuple[LaurentPoly, ...]
    depths: t.Tuple[int, ...]
    rho1_values: t.Tuple[LaurentPoly, ...]
    distinct_from: int

    @property
    def stabilizing(self) -> bool:
        """True if the agreement depth never drops on the computed range."""
        return all(a <= b for a, b in zip(self.depths, self.depths[1:]))

    @property
    def r0(self) -> int:
        return self.series.r0

    def asdict(self) -> dict:
        return {
            "family": self.family.asdict(),
            "limit": self.limit.to_str("T"),
            "series": self.series.asdict(),
            "d_t": [
                {"t": k, "d_t": d.to_str("T"), "depth": depth}
                for k, (d, depth) in enumerate(zip(self.differences, self.depths))
            ],
            "rho1": [p.to_str("T") for p in self.rho1_values],
            "distinct_from": self.distinct_from,
            "stabilizing": self.stabilizing,
        }


def convergence_report(f: TwistedFamily, t_max: int, r0: int) -> GrowthReport:
    """Compare ``d_t`` for t = 0 .. t_max with the expansion of the growth rate through r0.

    Raises
    ------
    ValueError
        if t_max < 1.
    """
    if t_max < 1:
        raise ValueError(f"t_max must be at least 1, got {t_max}")

    limit = growth_rate(f)
    series = series_expand(limit, r0)
    differences = tuple(d_t_empirical(f, k) for k in range(t_max + 1))
    depths = tuple(series.agreement_depth(d) for d in differences)
    values = tuple(rho1_at(f, k) for k in range(t_max + 2))

    logger.info("agreement depths of %s through T^%d: %s", f, r0, depths)
    return GrowthReport(
        family=f,
        limit=limit,
        series=series,
        differences=differences,
        depths=depths,
        rho1_values=values,
        distinct_from=_distinct_from(values),
    )


def alexander_convergence(f: TwistedFamily, t_max: int, r0: int) -> t.Tuple[int, ...]:
    """Agreement depths of the normalized Alexander polynomials with the expanded limit."""
    series = series_expand(alexander_limit(f), r0)
    return tuple(series.agreement_depth(normalized_alexander(f, k)) for k in range(t_max + 1))


def _distinct_from(values: t.Sequence[LaurentPoly]) -> int:
    start = len(values) - 1
    seen = {values[-1]}
    for k in range(len(values) - 2, -1, -1):
        if values[k] in seen:
            break
        seen.add(values[k])
        start = k
    return start
