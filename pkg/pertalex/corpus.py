# Copyright The pertalex contributors
# SPDX-License-Identifier: Apache-2.0

import json
import logging
import typing as t
from dataclasses import dataclass
from pathlib import Path

from . import exceptions
from .braid import BraidWord
from .diagram import ClosureLayout, UprightDiagram, braid_closure_layout, braid_closure_to_long
from .ring import LaurentPoly, RatFun
from .twisting import TwistedFamily
from .validate import validate

logger = logging.getLogger(__name__)

CORPUS_PATH = Path(__file__).parent / "corpus.json"


@dataclass(frozen=True)
class Presentation:
    """One way of drawing a knot: a braid closed at one or more cuts, or a diagram.

    Parameters
    ----------
    braid: pertalex.braid.BraidWord, optional
        Braid whose closure is the knot.
    diagram: pertalex.diagram.UprightDiagram, optional
        Explicit long knot diagram. Exactly one of braid and diagram is set.
    cuts: tuple of int, optional
        Positions at which the braid closure is opened. Default is (1,).
    """

    braid: t.Optional[BraidWord] = None
    diagram: t.Optional[UprightDiagram] = None
    cuts: t.Tuple[int, ...] = (1,)

    @classmethod
    def fromdict(cls, data_dict: dict) -> "Presentation":
        return cls(
            braid=BraidWord.fromdict(data_dict["braid"]) if "braid" in data_dict else None,
            diagram=(
                UprightDiagram.fromdict(data_dict["diagram"]) if "diagram" in data_dict else None
            ),
            cuts=tuple(data_dict.get("cuts", [1])),
        )

    def asdict(self) -> dict:
        if self.braid is not None:
            return {"braid": self.braid.asdict(), "cuts": list(self.cuts)}
        return {"diagram": self.diagram.asdict()}

    def diagrams(self) -> t.List[t.Tuple[str, UprightDiagram]]:
        """Labeled long diagrams, one per cut for a braid."""
        if self.braid is None:
            return [("diagram", self.diagram)]
        label = f"braid [{self.braid}] on {self.braid.strand_count} strands"
        return [
            (f"{label}, cut {cut}", braid_closure_to_long(self.braid, cut)) for cut in self.cuts
        ]

    def first_diagram(self) -> UprightDiagram:
        return self.diagrams()[0][1]

    def mirror(self) -> "Presentation":
        if self.braid is not None:
            return Presentation(braid=self.braid.mirror(), cuts=self.cuts)
        return Presentation(diagram=self.diagram.mirror())

    def layouts(self) -> t.List[ClosureLayout]:
        """Compiled closures of a braid presentation, one per cut; empty for a diagram."""
        if self.braid is None:
            return []
        return [braid_closure_layout(self.braid, cut) for cut in self.cuts]


@dataclass(frozen=True)
class KnotEntry:
    """A corpus knot with golden values.

    Parameters
    ----------
    name: str
        Display name.
    presentations: tuple of Presentation
        Presentations of the same knot.
    positive: bool, optional
        Whether the knot is positive. Default is False.
    mirror: bool, optional
        Whether the mirror image is checked as well. Default is False.
    alexander: pertalex.ring.LaurentPoly, optional
        Golden Alexander polynomial.
    rho1: pertalex.ring.LaurentPoly, optional
        Golden rho_1.
    """

    name: str
    presentations: t.Tuple[Presentation, ...]
    positive: bool = False
    mirror: bool = False
    alexander: t.Optional[LaurentPoly] = None
    rho1: t.Optional[LaurentPoly] = None

    @classmethod
    def fromdict(cls, data_dict: dict) -> "KnotEntry":
        return cls(
            name=data_dict["name"],
            presentations=tuple(Presentation.fromdict(p) for p in data_dict["presentations"]),
            positive=data_dict.get("positive", False),
            mirror=data_dict.get("mirror", False),
            alexander=_optional_poly(data_dict.get("alexander")),
            rho1=_optional_poly(data_dict.get("rho1")),
        )

    def asdict(self) -> dict:
        data_dict = {
            "name": self.name,
            "positive": self.positive,
            "mirror": self.mirror,
            "presentations": [p.asdict() for p in self.presentations],
        }
        if self.alexander is not None:
            data_dict["alexander"] = golden_poly_asdict(self.alexander)
        if self.rho1 is not None:
            data_dict["rho1"] = golden_poly_asdict(self.rho1)
        return data_dict

    @property
    def crossing_count(self) -> int:
        return len(self.presentations[0].first_diagram().crossings)

    def mirrored(self) -> "KnotEntry":
        """The mirror image: same Alexander polynomial, negated rho_1, never positive."""
        return KnotEntry(
            name=f"mirror of {self.name}",
            presentations=tuple(p.mirror() for p in self.presentations),
            positive=False,
            mirror=False,
            alexander=self.alexander,
            rho1=None if self.rho1 is None else -self.rho1,
        )


@dataclass(frozen=True)
class FamilyEntry:
    """A corpus twisted family with golden limits.

    Parameters
    ----------
    name: str
        Display name.
    family: pertalex.twisting.TwistedFamily
        The family.
    alexander_limit, growth_rate: pertalex.ring.RatFun, optional
        Golden limits.
    stabilization: tuple of int, optional
        ``(t_max, r0)`` for the stabilization check. None skips it.
    """

    name: str
    family: TwistedFamily
    alexander_limit: t.Optional[RatFun] = None
    growth_rate: t.Optional[RatFun] = None
    stabilization: t.Optional[t.Tuple[int, int]] = None

    @classmethod
    def fromdict(cls, data_dict: dict) -> "FamilyEntry":
        stabilization = data_dict.get("stabilization")
        return cls(
            name=data_dict["name"],
            family=TwistedFamily.fromdict(dict(data_dict["family"], name=data_dict["name"])),
            alexander_limit=_optional_ratfun(data_dict.get("alexander_limit")),
            growth_rate=_optional_ratfun(data_dict.get("growth_rate")),
            stabilization=(
                None if stabilization is None else (stabilization["t_max"], stabilization["r0"])
            ),
        )

    def asdict(self) -> dict:
        family = self.family.asdict()
        family.pop("name", None)
        data_dict: t.Dict[str, t.Any] = {"name": self.name, "family": family}
        limits = {"alexander_limit": self.alexander_limit, "growth_rate": self.growth_rate}
        for key, value in limits.items():
            if value is not None:
                data_dict[key] = {
                    "num": golden_poly_asdict(value.num),
                    "den": golden_poly_asdict(value.den),
                }
        if self.stabilization is not None:
            t_max, r0 = self.stabilization
            data_dict["stabilization"] = {"t_max": t_max, "r0": r0}
        return data_dict


@dataclass(frozen=True)
class Corpus:
    """Knots and families the verification runs over."""

    knots: t.Tuple[KnotEntry, ...] = ()
    families: t.Tuple[FamilyEntry, ...] = ()

    @classmethod
    def fromdict(cls, data_dict: dict) -> "Corpus":
        return cls(
            knots=tuple(KnotEntry.fromdict(k) for k in data_dict["knots"]),
            families=tuple(FamilyEntry.fromdict(f) for f in data_dict.get("families", [])),
        )

    def asdict(self) -> dict:
        return {
            "knots": [k.asdict() for k in self.knots],
            "families": [f.asdict() for f in self.families],
        }

    def chiral_knots(self) -> t.List[KnotEntry]:
        """Every knot followed by its mirror image where the entry asks for it."""
        knots = []
        for knot in self.knots:
            knots.append(knot)
            if knot.mirror:
                knots.append(knot.mirrored())
        return knots

    def knot(self, name: str) -> KnotEntry:
        for knot in self.chiral_knots():
            if knot.name == name:
                return knot
        raise KeyError(f"no knot named {name!r} in the corpus")


def load_corpus(path: t.Optional[t.Union[str, Path]] = None) -> Corpus:
    """Load a corpus file, by default the one shipped with pertalex.

    Raises
    ------
    pertalex.exceptions.SchemaError
        if the file does not validate against the corpus schema.
    """
    path = CORPUS_PATH if path is None else Path(path)
    with Path(path).open() as corpus_file:
        data = json.load(corpus_file)

    is_data_valid, schema_errors = validate(data, "corpus")
    if not is_data_valid:
        raise exceptions.SchemaError(
            f"{path} is not a valid corpus:\n - " + "\n - ".join(schema_errors)
        )

    corpus = Corpus.fromdict(data)
    logger.debug(
        "loaded %d knots and %d families from %s", len(corpus.knots), len(corpus.families), path
    )
    return corpus


def golden_poly(data_dict: dict) -> LaurentPoly:
    """Polynomial from ``{"lowest": e, "coefficients": [...]}``."""
    lowest = data_dict["lowest"]
    return LaurentPoly.from_dict({lowest + k: c for k, c in enumerate(data_dict["coefficients"])})


def golden_poly_asdict(poly: LaurentPoly) -> dict:
    if not poly:
        return {"lowest": 0, "coefficients": []}
    terms = poly.integer_terms()
    lowest, highest = min(terms), max(terms)
    return {
        "lowest": lowest,
        "coefficients": [terms.get(e, 0) for e in range(lowest, highest + 1)],
    }


def _optional_poly(data_dict: t.Optional[dict]) -> t.Optional[LaurentPoly]:
    return None if data_dict is None else golden_poly(data_dict)


def _optional_ratfun(data_dict: t.Optional[dict]) -> t.Optional[RatFun]:
    if data_dict is None:
        return None
    return RatFun(golden_poly(data_dict["num"]), golden_poly(data_dict["den"]))
