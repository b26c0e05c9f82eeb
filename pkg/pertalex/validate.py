# Copyright The pertalex contributors
# SPDX-License-Identifier: Apache-2.0

import json
import os
import typing as t
from pathlib import Path

import jsonschema

from . import exceptions

SCHEMA_DIR = Path(__file__).parent / "schemas"


def validate(data: dict, schema_path: str = "diagram") -> t.Tuple[bool, t.List[str]]:
    """Validate JSON data represented by a dict via a given schema.

    Parameters
    ----------
    data: dict
        JSON data to be validated.
    schema_path: str, optional
        Path to the JSON schema used for the validation. If the schema is in the /schemas
        folder, its short name can be used (i.e. schema_path can be 'family' or 'family_schema'
        to load the family_schema.json file). Default is 'diagram'.

    Returns
    -------
    is_data_valid: bool
        True if the data validates against the schema, False if not.
    schema_errors: list of str
        Messages ``"$path: message"`` for every violation. Empty if the data is valid.

    Raises
    ------
    FileNotFoundError
        if the schema file does not exist or the short name matches no schema.
    pertalex.exceptions.AmbiguousSchemaNameError
        if the short name matches more than one schema.
    """
    schema = _load_schema(_resolve_schema_path(schema_path))
    validator = jsonschema.Draft7Validator(schema=schema)

    schema_errors = []
    for error in validator.iter_errors(data):
        schema_errors.append("$" + error.json_path[1:] + ": " + str(error.message))

    return len(schema_errors) == 0, schema_errors


def _resolve_schema_path(schema_path: t.Union[str, Path]) -> Path:
    # A complete path contains at least one separator, a short name none.
    if isinstance(schema_path, Path) or "/" in schema_path or "\\" in schema_path:
        return Path(schema_path)

    local_schemas = sorted(p for p in os.listdir(SCHEMA_DIR) if p.endswith(".json"))
    applicable = [p for p in local_schemas if p.startswith(schema_path)]

    if len(applicable) == 1:
        return SCHEMA_DIR / applicable[0]

    if len(applicable) == 0:
        err_msg = f"The key {schema_path} does not apply to a schema. Available schema files:"
        for p in local_schemas:
            err_msg += "\n - " + p
        raise FileNotFoundError(err_msg)

    err_msg = f"The key {schema_path} applies to multiple files in /schemas:"
    for p in applicable:
        err_msg += "\n - " + p
    raise exceptions.AmbiguousSchemaNameError(err_msg)


def _load_schema(path: Path) -> dict:
    try:
        with path.open() as schema_file:
            return json.load(schema_file)
    except FileNotFoundError as e:
        raise FileNotFoundError(f"The schema file could not be found in {path}") from e
