# Copyright The pertalex contributors
# SPDX-License-Identifier: Apache-2.0

import json
from pathlib import Path

import json5
import pytest

# master_test.py is a standalone runner script (python tests/master_test.py), not a test module.
collect_ignore = ["master_test.py"]

# Variables
schema_dir_var = Path(__file__).parent.parent / "pertalex" / "schemas"
assets_dir_var = Path(__file__).parent / "test_pertalex" / "__test_assets__"

metaschema_path_var = assets_dir_var / "metaschema.json"
kink_diagram_path_var = assets_dir_var / "kink_diagram.json"
trefoil_braid_path_var = assets_dir_var / "trefoil_braid.json"
t2_family_path_var = assets_dir_var / "t2_family.json"
kink_chain_path_var = assets_dir_var / "kink_chain.json"


@pytest.fixture(scope="session", autouse=True)
def compile_uncommented_test_file():
    """Compiles the commented diagram asset from json5 to json."""

    commented_file_path = Path(str(kink_diagram_path_var) + "5")

    with commented_file_path.open() as f:
        data = json5.load(f)

    with kink_diagram_path_var.open("w") as f:
        json.dump(data, f, indent=4)


def _cached_json(request, key: str, path: Path) -> dict:
    data = request.config.cache.get(key, None)

    if data is None:
        with path.open() as data_file:
            data = json.load(data_file)
            request.config.cache.set(key, data)

    return data


# Schemas
@pytest.fixture
def schema_dir():
    return schema_dir_var


@pytest.fixture
def metaschema_path():
    return metaschema_path_var


@pytest.fixture
def metaschema_data(request):
    return _cached_json(request, "metaschema_data", metaschema_path_var)


# Kink diagram
@pytest.fixture
def kink_diagram_path():
    return kink_diagram_path_var


@pytest.fixture
def kink_diagram_data():
    # Read freshly, the file is compiled at session start.
    with kink_diagram_path_var.open() as f:
        return json.load(f)


# Trefoil braid
@pytest.fixture
def trefoil_braid_path():
    return trefoil_braid_path_var


@pytest.fixture
def trefoil_braid_data(request):
    return _cached_json(request, "trefoil_braid_data", trefoil_braid_path_var)


# T(2,2t+1) family
@pytest.fixture
def t2_family_path():
    return t2_family_path_var


@pytest.fixture
def t2_family_data(request):
    return _cached_json(request, "t2_family_data", t2_family_path_var)


# Kink chain
@pytest.fixture
def kink_chain_path():
    return kink_chain_path_var


@pytest.fixture
def kink_chain_data(request):
    return _cached_json(request, "kink_chain_data", kink_chain_path_var)
