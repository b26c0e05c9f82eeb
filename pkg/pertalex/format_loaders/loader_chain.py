# Copyright The pertalex contributors
# SPDX-License-Identifier: Apache-2.0

import typing as t
from pathlib import Path

from ..markov import TangleChain
from ..ring import RatFun
from ._loader_abc import LoaderABC


class LoaderChain(LoaderABC):
    """Loader for tangle chain dumps ``{"states", "incoming", "outgoing", "matrix"}``.

    Attributes
    ----------
    warnings: list[str]
        States other than the outgoing ones whose transition weights do not sum to 1.
    """

    warnings: t.List[str]

    SCHEMA_PATH: Path = Path(__file__).parent.parent / "schemas" / "chain_schema.json"

    def load(self, data: dict, validate: bool = True) -> TangleChain:
        """Load the data into a TangleChain and return it.

        Raises
        ------
        pertalex.exceptions.SchemaError
            if validate is True and the data does not validate against the schema.
        pertalex.exceptions.ShapeError
            if the matrix does not match the states.
        """
        self.warnings = []
        if validate:
            self.validate(data)

        chain = TangleChain.fromdict(data)
        for state, total in zip(chain.states, chain.matrix().row_sums()):
            if state not in chain.outgoing and total != RatFun(1):
                self.warnings.append(f"transition weights out of state {state} sum to {total}")
        return chain

    def supports(self, data: dict) -> bool:
        return "states" in data and "matrix" in data
