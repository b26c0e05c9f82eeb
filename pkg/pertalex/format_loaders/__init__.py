# Copyright The pertalex contributors
# SPDX-License-Identifier: Apache-2.0
"""Loader classes for every JSON input shape, collected automatically."""

from importlib import import_module
from inspect import isclass
from pathlib import Path
from pkgutil import iter_modules

from ._loader_abc import LoaderABC

# every LoaderABC subclass defined in a module of this package becomes a package attribute
for _, _module_name, _ in iter_modules([str(Path(__file__).resolve().parent)]):
    _module = import_module(f"{__name__}.{_module_name}")
    for _name, _attribute in vars(_module).items():
        if isclass(_attribute) and issubclass(_attribute, LoaderABC):
            globals()[_name] = _attribute
