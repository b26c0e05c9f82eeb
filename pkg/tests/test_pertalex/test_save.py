# Copyright The pertalex contributors
# SPDX-License-Identifier: Apache-2.0

import json
import os
import sys
import tempfile
from pathlib import Path

import pytest

sys.path.insert(1, str(Path(__file__).parent.parent.parent))

import pertalex
from pertalex.diagram import braid_closure_to_long
from pertalex.markov import TangleChain
from pertalex.ring import T


def test_save_diagram(kink_diagram_path):
    with tempfile.TemporaryDirectory("w") as temp_dir:

        diagram_orig = pertalex.load(kink_diagram_path)

        pertalex.save(diagram_orig, Path(temp_dir) / "test_save_file.json", validate=True)
        diagram_saved = pertalex.load(Path(temp_dir) / "test_save_file.json", True)

    assert diagram_orig == diagram_saved


def test_save_json(t2_family_data):
    with tempfile.TemporaryDirectory("w") as temp_dir:

        family = pertalex.load_dict(t2_family_data)
        pertalex.save(family, Path(temp_dir) / "test_save_file.json", prettify_json=True)

        with (Path(temp_dir) / "test_save_file.json").open() as f:
            saved_data = json.load(f)

    assert saved_data == t2_family_data


def test_save_compiled_closure(trefoil_braid_path):
    with tempfile.TemporaryDirectory("w") as temp_dir:

        d = braid_closure_to_long(pertalex.load(trefoil_braid_path))
        pertalex.save(d, Path(temp_dir) / "trefoil.json", validate=True)
        pertalex.save(TangleChain.from_diagram(d), Path(temp_dir) / "chain.json", validate=True)

        assert pertalex.load(Path(temp_dir) / "trefoil.json") == d
        assert pertalex.load(Path(temp_dir) / "chain.json") == TangleChain.from_diagram(d)


def test_save_unsupported_type():
    with tempfile.TemporaryDirectory("w") as temp_dir:
        with pytest.raises(TypeError):
            pertalex.save(T, Path(temp_dir) / "poly.json")


# Executes the test if the file is called
if __name__ == "__main__":
    os.system("clear")
    pytest.main([__file__, "--disable-pytest-warnings", "--cache-clear"])
