# Copyright The pertalex contributors
# SPDX-License-Identifier: Apache-2.0

import typing as t
from abc import ABC, abstractmethod
from pathlib import Path

from ..exceptions import SchemaError
from ..validate import validate as global_validate


class LoaderABC(ABC):
    """Abstract base class of the JSON loaders.

    Every input shape pertalex reads has a loader class inheriting from this class. Loaders are
    discovered automatically by ``pertalex.load``.

    Attributes
    ----------
    warnings: list[str]
        Non-critical inconsistencies found during the last call of load().
    SCHEMA_PATH: Path
        Absolute path to the JSON schema.
    """

    warnings: t.List[str]
    SCHEMA_PATH: Path

    @abstractmethod
    def load(self, data: dict, validate: bool = True) -> t.Any:
        """Load JSON data into a domain object.

        Parameters
        ----------
        data: dict
            A dictionary loaded from a JSON file.
        validate: bool
            If True, the data is validated via the respective schema first. Default is True.

        Raises
        ------
        pertalex.exceptions.SchemaError
            if validate is True and the data does not validate against the schema.
        """
        raise NotImplementedError

    @abstractmethod
    def supports(self, data: dict) -> bool:
        """Determine from the keys of the data whether the loader is suitable for it."""
        raise NotImplementedError

    def validate(self, data: dict):
        """Validate JSON data with the corresponding schema.

        Raises
        ------
        pertalex.exceptions.SchemaError
            if the data does not validate.
        """
        is_data_valid, schema_errors = global_validate(data, str(self.SCHEMA_PATH))
        if not is_data_valid:
            raise SchemaError(
                f"data does not validate against {self.SCHEMA_PATH.name}:\n - "
                + "\n - ".join(schema_errors)
            )
