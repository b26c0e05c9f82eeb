# Copyright The pertalex contributors
# SPDX-License-Identifier: Apache-2.0

import json
import logging
import typing as t
from pathlib import Path

from . import exceptions, format_loaders
from .format_loaders import LoaderABC

logger = logging.getLogger(__name__)


def load(path: t.Union[str, Path], validate: bool = False, show_warnings: bool = True) -> t.Any:
    """Load a braid word, diagram, twisted family or tangle chain from a JSON file.

    Parameters
    ----------
    path: str or Path
        Path to the JSON file.
    validate: bool, optional
        If True, the data is validated via the respective schema before it is converted. Default
        is False.
    show_warnings: bool, optional
        If True, non-critical inconsistencies in the data are logged as warnings. Default is
        True.

    Returns
    -------
    obj: BraidWord, UprightDiagram, TwistedFamily or TangleChain
        The loaded object, depending on the keys of the JSON data.

    Raises
    ------
    pertalex.exceptions.UnsupportedFormatError
        if the file is not a JSON file or its data matches no loader.
    pertalex.exceptions.SchemaError
        if validate is True and the data does not validate.
    """
    if not str(path).lower().endswith(".json"):
        raise exceptions.UnsupportedFormatError(f"{path} is not in a supported file format.")

    with open(path) as data_file:
        data = json.load(data_file)

    return load_dict(data, validate, show_warnings, source=str(path))


def load_dict(
    data: t.Any, validate: bool = False, show_warnings: bool = True, source: str = "data"
) -> t.Any:
    """Convert already parsed JSON data like ``load()`` does for a file.

    Parameters
    ----------
    source: str, optional
        Name used in warnings and error messages. Default is "data".

    Raises
    ------
    pertalex.exceptions.UnsupportedFormatError
        if the data matches no loader.
    pertalex.exceptions.SchemaError
        if validate is True and the data does not validate.
    """
    # Loaders are every LoaderABC subclass in the format_loaders package.
    loader_classes = [
        cls
        for cls in vars(format_loaders).values()
        if isinstance(cls, type) and issubclass(cls, LoaderABC) and cls != LoaderABC
    ]

    if isinstance(data, dict):
        for loader_class in sorted(loader_classes, key=lambda cls: cls.__name__):
            loader = loader_class()
            if not loader.supports(data):
                continue

            obj = loader.load(data, validate=validate)
            if show_warnings:
                for warning in loader.warnings:
                    logger.warning("%s: %s", source, warning)
            return obj

    raise exceptions.UnsupportedFormatError(f"{source} is not in a supported file format.")
