# Copyright The pertalex contributors
# SPDX-License-Identifier: Apache-2.0

import typing as t
from pathlib import Path

from ..braid import BraidWord
from ._loader_abc import LoaderABC


class LoaderBraid(LoaderABC):
    """Loader for braid words ``{"n": ..., "word": [...]}``.

    Attributes
    ----------
    warnings: list[str]
        Adjacent letters cancelling each other, found during the last load().
    """

    warnings: t.List[str]

    SCHEMA_PATH: Path = Path(__file__).parent.parent / "schemas" / "braid_schema.json"

    def load(self, data: dict, validate: bool = True) -> BraidWord:
        """Load the data into a BraidWord and return it.

        Raises
        ------
        pertalex.exceptions.SchemaError
            if validate is True and the data does not validate against the schema.
        pertalex.exceptions.InvalidBraidError
            if a letter does not fit the strand count.
        """
        self.warnings = []
        if validate:
            self.validate(data)

        word = BraidWord.fromdict(data)
        for position, (a, b) in enumerate(zip(word.letters, word.letters[1:])):
            if a == -b:
                self.warnings.append(
                    f"letters {a} and {b} at positions {position} and {position + 1} cancel"
                )
        return word

    def supports(self, data: dict) -> bool:
        return "n" in data and "word" in data
