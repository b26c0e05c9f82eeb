# Copyright The pertalex contributors
# SPDX-License-Identifier: Apache-2.0

import json
import os

import jsonschema
import pytest

SCHEMA_NAMES = ["braid", "chain", "corpus", "diagram", "family"]


def _schema(schema_dir, name: str) -> dict:
    with (schema_dir / f"{name}_schema.json").open() as f:
        return json.load(f)


@pytest.mark.parametrize("name", SCHEMA_NAMES)
def test_metaschema_validation(name, schema_dir, metaschema_data):
    assert jsonschema.validate(_schema(schema_dir, name), metaschema_data) is None


def test_sample_data_validation(
    schema_dir, kink_diagram_data, trefoil_braid_data, t2_family_data, kink_chain_data
):
    samples = {
        "diagram": kink_diagram_data,
        "braid": trefoil_braid_data,
        "family": t2_family_data,
        "chain": kink_chain_data,
    }
    for name, data in samples.items():
        assert jsonschema.validate(data, _schema(schema_dir, name)) is None


def test_shipped_corpus_validation(schema_dir):
    with (schema_dir.parent / "corpus.json").open() as f:
        corpus_data = json.load(f)

    assert jsonschema.validate(corpus_data, _schema(schema_dir, "corpus")) is None


# Executes the test if the file is called
if __name__ == "__main__":
    os.system("clear")
    pytest.main([__file__, "--disable-pytest-warnings", "--cache-clear"])
