# Copyright The pertalex contributors
# SPDX-License-Identifier: Apache-2.0

import logging
import typing as t
from dataclasses import dataclass

from .. import exceptions
from ..diagram import UprightDiagram
from ..ring import LaurentPoly
from .alexander import alexander
from .conway import conway, delta1, rho1_reduced
from .rho1 import rho1

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class KnotInvariants:
    """Invariants of one knot diagram.

    Parameters
    ----------
    alexander: pertalex.ring.LaurentPoly
        Symmetrized Alexander polynomial.
    conway: pertalex.ring.LaurentPoly
        Conway polynomial in z.
    rho1: pertalex.ring.LaurentPoly
        Perturbed Alexander invariant.
    rho1_reduced: pertalex.ring.LaurentPoly or None
        ``T / (1 - T)^2 * rho1``, None if rho1 is not symmetric or not divisible by
        ``(1 - T)^2``.
    delta1: pertalex.ring.LaurentPoly or None
        Perturbed Conway invariant in z, None whenever rho1_reduced is None.
    findings: tuple of str, optional
        Conjecture violations met while computing. Default is ().
    name: str, optional
        Name of the knot. Default is None.
    presentation: dict, optional
        Diagram JSON the invariants were computed from, loadable with ``pertalex.load_dict``.
        Default is None.
    """

    alexander: LaurentPoly
    conway: LaurentPoly
    rho1: LaurentPoly
    rho1_reduced: t.Optional[LaurentPoly]
    delta1: t.Optional[LaurentPoly]
    findings: t.Tuple[str, ...] = ()
    name: t.Optional[str] = None
    presentation: t.Optional[dict] = None

    def asdict(self) -> dict:
        """Export self as a JSON-compatible dict of rendered polynomials."""
        return {
            "name": self.name,
            "presentation": self.presentation,
            "alexander": self.alexander.to_str("T"),
            "conway": self.conway.to_str("z"),
            "rho1": self.rho1.to_str("T"),
            "rho1_reduced": _render(self.rho1_reduced, "T"),
            "delta1": _render(self.delta1, "z"),
            "findings": list(self.findings),
        }


@dataclass(frozen=True)
class PositivityReport:
    """Sign pattern of the perturbed Conway invariant.

    Parameters
    ----------
    delta1: pertalex.ring.LaurentPoly or None
        The invariant, None if it could not be computed.
    claims_positive: bool
        Whether the knot is known to be positive.
    all_nonpositive: bool
        No coefficient of delta1 is positive.
    all_nonnegative: bool
        No coefficient of delta1 is negative.
    counterexample: bool
        The knot claims to be positive but delta1 has a positive coefficient.
    findings: tuple of str
        Findings carried over from the invariant computation.
    """

    delta1: t.Optional[LaurentPoly]
    claims_positive: bool
    all_nonpositive: bool
    all_nonnegative: bool
    counterexample: bool
    findings: t.Tuple[str, ...] = ()

    @property
    def consistent(self) -> bool:
        return not self.counterexample and not self.findings

    def asdict(self) -> dict:
        return {
            "delta1": _render(self.delta1, "z"),
            "claims_positive": self.claims_positive,
            "all_nonpositive": self.all_nonpositive,
            "all_nonnegative": self.all_nonnegative,
            "counterexample": self.counterexample,
            "findings": list(self.findings),
        }


def compute_invariants(d: UprightDiagram, name: t.Optional[str] = None) -> KnotInvariants:
    """Compute every invariant of a diagram in one pass.

    Conjecture violations do not raise; they are logged and collected in ``findings``.

    Raises
    ------
    pertalex.exceptions.InvalidDiagramError
        if the diagram is not valid.
    pertalex.exceptions.BookkeepingError
        if rho_1 does not come out as an integer Laurent polynomial.
    """
    alex = alexander(d)
    rho = rho1(d)

    findings = []
    try:
        reduced = rho1_reduced(rho)
    except exceptions.ConjectureCounterexampleError as e:
        logger.warning("%s: %s", name or "diagram", e)
        findings.append(str(e))
        reduced = None

    return KnotInvariants(
        alexander=alex,
        conway=conway(alex),
        rho1=rho,
        rho1_reduced=reduced,
        delta1=delta1(reduced) if reduced is not None else None,
        findings=tuple(findings),
        name=name,
        presentation=d.asdict(),
    )


def positivity_report(
    d: UprightDiagram,
    claims_positive: bool = False,
    invariants: t.Optional[KnotInvariants] = None,
) -> PositivityReport:
    """Check the sign pattern of delta_1 against the positivity of the knot.

    Positive knots are expected to have no positive coefficient in delta_1. A positive knot
    that breaks this is flagged as a counterexample instead of raising.

    Parameters
    ----------
    d: pertalex.diagram.UprightDiagram
        A valid long knot diagram.
    claims_positive: bool, optional
        Whether the knot is positive. Default is False.
    invariants: KnotInvariants, optional
        Precomputed invariants of d. Computed when omitted.
    """
    if invariants is None:
        invariants = compute_invariants(d)

    coefficients = [] if invariants.delta1 is None else [c for _, c in invariants.delta1.items()]
    all_nonpositive = invariants.delta1 is not None and all(c <= 0 for c in coefficients)
    all_nonnegative = invariants.delta1 is not None and all(c >= 0 for c in coefficients)
    counterexample = claims_positive and invariants.delta1 is not None and not all_nonpositive
    if counterexample:
        logger.warning(
            "positive knot %s has delta_1 = %s with a positive coefficient",
            invariants.name or "diagram",
            invariants.delta1.to_str("z"),
        )

    return PositivityReport(
        delta1=invariants.delta1,
        claims_positive=claims_positive,
        all_nonpositive=all_nonpositive,
        all_nonnegative=all_nonnegative,
        counterexample=counterexample,
        findings=invariants.findings,
    )


def mirror_law_holds(d: UprightDiagram) -> bool:
    """True if rho_1 of the mirrored diagram is ``-rho_1`` of the diagram."""
    return rho1(d.mirror()) == -rho1(d)


def _render(polynomial: t.Optional[LaurentPoly], variable: str) -> t.Optional[str]:
    return None if polynomial is None else polynomial.to_str(variable)
