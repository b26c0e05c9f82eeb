# Copyright The pertalex contributors
# SPDX-License-Identifier: Apache-2.0

import typing as t
from pathlib import Path

from ..diagram import UprightDiagram, validate_diagram
from ._loader_abc import LoaderABC


class LoaderDiagram(LoaderABC):
    """Loader for upright long knot diagrams.

    Attributes
    ----------
    warnings: list[str]
        Turning numbers stored as 0, found during the last load().
    """

    warnings: t.List[str]

    SCHEMA_PATH: Path = Path(__file__).parent.parent / "schemas" / "diagram_schema.json"

    def load(self, data: dict, validate: bool = True) -> UprightDiagram:
        """Load the data into a validated UprightDiagram and return it.

        Raises
        ------
        pertalex.exceptions.SchemaError
            if validate is True and the data does not validate against the schema.
        pertalex.exceptions.InvalidDiagramError
            if the crossings do not trace a single long component.
        """
        self.warnings = []
        if validate:
            self.validate(data)

        for label, rotation in data.get("rotations", {}).items():
            if rotation == 0:
                self.warnings.append(f"turning number 0 stored for strand {label}")

        diagram = UprightDiagram.fromdict(data)
        validate_diagram(diagram)
        return diagram

    def supports(self, data: dict) -> bool:
        return "strands" in data
