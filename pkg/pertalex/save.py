# Copyright The pertalex contributors
# SPDX-License-Identifier: Apache-2.0

import json
import typing as t
from pathlib import Path

from . import exceptions
from .braid import BraidWord
from .diagram import UprightDiagram
from .markov import TangleChain
from .twisting import TwistedFamily
from .validate import validate as validate_func

_SCHEMAS = {
    BraidWord: "braid",
    UprightDiagram: "diagram",
    TwistedFamily: "family",
    TangleChain: "chain",
}


def save(obj: t.Any, path: t.Union[str, Path], prettify_json: bool = False, validate: bool = False):
    """Save a braid word, diagram, twisted family or tangle chain in a JSON file.

    Parameters
    ----------
    obj: BraidWord, UprightDiagram, TwistedFamily or TangleChain
        Object to be saved.
    path: str or Path
        Path to the JSON file.
    prettify_json: bool, optional
        If True, the JSON is saved with linebreaks and indents. Default is False.
    validate: bool, optional
        If True, the data is validated via the schema of its type before saving. Default is
        False.

    Raises
    ------
    TypeError
        if obj is of none of the supported types.
    pertalex.exceptions.SchemaError
        if validate is True and the data does not validate.
    """
    schema = _SCHEMAS.get(type(obj))
    if schema is None:
        raise TypeError(
            f"cannot save {type(obj).__name__}. Supported types: "
            + ", ".join(cls.__name__ for cls in _SCHEMAS)
        )

    data = obj.asdict()

    if validate:
        is_data_valid, err_msgs = validate_func(data, schema)
        if not is_data_valid:
            schema_err_msg = (
                f"The data could not be saved, because it does not validate against the {schema} "
                + "schema:"
            )
            for err_msg in err_msgs:
                schema_err_msg += "\n - " + err_msg
            raise exceptions.SchemaError(schema_err_msg)

    with Path(path).open("w") as save_file:
        if prettify_json:
            json.dump(data, save_file, indent=4)
        else:
            json.dump(data, save_file)
