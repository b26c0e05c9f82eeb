# Copyright The pertalex contributors
# SPDX-License-Identifier: Apache-2.0
"""Verification checks, collected automatically."""

from importlib import import_module
from inspect import isclass
from pathlib import Path
from pkgutil import iter_modules

from ._check_abc import CheckResult, _CheckABC

for _, _module_name, _ in iter_modules([str(Path(__file__).resolve().parent)]):
    _module = import_module(f"{__name__}.{_module_name}")
    for _name, _attribute in vars(_module).items():
        if isclass(_attribute) and issubclass(_attribute, _CheckABC):
            globals()[_name] = _attribute
