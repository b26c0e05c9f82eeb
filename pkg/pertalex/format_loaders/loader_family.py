# Copyright The pertalex contributors
# SPDX-License-Identifier: Apache-2.0

import typing as t
from pathlib import Path

from ..twisting import TwistedFamily
from ._loader_abc import LoaderABC


class LoaderFamily(LoaderABC):
    """Loader for twisted families ``{"m", "prefix", "suffix", "slot", "cut"}``.

    Attributes
    ----------
    warnings: list[str]
        Adjacent letters of the prefix or suffix cancelling each other.
    """

    warnings: t.List[str]

    SCHEMA_PATH: Path = Path(__file__).parent.parent / "schemas" / "family_schema.json"

    def load(self, data: dict, validate: bool = True) -> TwistedFamily:
        """Load the data into a TwistedFamily and return it.

        Raises
        ------
        pertalex.exceptions.SchemaError
            if validate is True and the data does not validate against the schema.
        pertalex.exceptions.NotAKnotError
            if the family closes to a link.
        """
        self.warnings = []
        if validate:
            self.validate(data)

        for part in ("prefix", "suffix"):
            letters = data.get(part, [])
            for position, (a, b) in enumerate(zip(letters, letters[1:])):
                if a == -b:
                    self.warnings.append(
                        f"{part} letters {a} and {b} at positions {position} and "
                        + f"{position + 1} cancel"
                    )
        return TwistedFamily.fromdict(data)

    def supports(self, data: dict) -> bool:
        return "m" in data and "slot" in data
