# Copyright The pertalex contributors
# SPDX-License-Identifier: Apache-2.0

import json
import os
import sys
import tempfile
from pathlib import Path

import pytest

sys.path.insert(1, str(Path(__file__).parent.parent.parent))

from pertalex import load, load_dict
from pertalex.braid import full_twist_power
from pertalex.cli import run
from pertalex.corpus import load_corpus


def test_invariants_json(capsys):
    assert run(["invariants", "--braid", "1 1 1", "--n", "2", "--json"]) == 0

    data = json.loads(capsys.readouterr().out)
    assert data["invariants"]["rho1"] == "-T^-2 + 2*T^-1 - 2 + 2*T - T^2"
    assert data["invariants"]["alexander"] == "T^-1 - 1 + T"
    assert data["positivity"]["counterexample"] is False


def test_invariants_presentation_is_accepted_back(capsys):
    assert run(["invariants", "--braid", "1 1 1", "--n", "2", "--cut", "2", "--json"]) == 0
    first = json.loads(capsys.readouterr().out)

    presentation = json.dumps(first["invariants"]["presentation"])
    assert run(["invariants", "--data", presentation, "--json"]) == 0
    second = json.loads(capsys.readouterr().out)

    assert second == first


def test_invariants_text(capsys, kink_diagram_path):
    assert run(["invariants", "--file", str(kink_diagram_path)]) == 0

    lines = capsys.readouterr().out.splitlines()
    assert "alexander: 1" in lines
    assert "rho1: 0" in lines


def test_invariants_inline_data(capsys):
    data = json.dumps({"n": 2, "word": [-1, -1, -1]})

    assert run(["invariants", "--data", data, "--cut", "2", "--json"]) == 0
    assert json.loads(capsys.readouterr().out)["invariants"]["rho1"] == (
        "T^-2 - 2*T^-1 + 2 - 2*T + T^2"
    )


def test_burau_full_twist(capsys):
    assert run(["burau", "--full-twist", "3", "--power", "2", "--json"]) == 0
    assert json.loads(capsys.readouterr().out)["matrix"] == full_twist_power(3, 2).asdict()


def test_burau_width(capsys, monkeypatch):
    assert run(["burau", "--braid", "1 1 1"]) == 0
    wide = capsys.readouterr().out.splitlines()

    monkeypatch.setenv("PERTALEX_WIDTH", "16")
    assert run(["burau", "--braid", "1 1 1"]) == 0
    narrow = capsys.readouterr().out.splitlines()

    assert wide[-1] == "alexander: T^-1 - 1 + T"
    assert len(narrow) > len(wide)


def test_chain(capsys, kink_chain_path):
    assert run(["chain", "--file", str(kink_chain_path), "--cartier-foata", "--json"]) == 0

    data = json.loads(capsys.readouterr().out)
    assert data["states"] == 3
    assert data["determinant"] == "1"
    assert data["cartier_foata"] == {"sum": "1", "agrees": True}
    assert load_dict(data["chain"]) == load(kink_chain_path)


def test_chain_oracle(capsys):
    assert run(["chain", "--braid", "1 1 1", "--oracle", "0.99", "--json"]) == 0

    oracle = json.loads(capsys.readouterr().out)["oracle"]
    assert oracle["max_len"] == 60
    assert abs(oracle["walk_sum"] - oracle["greens"]) < 1e-6


def test_family_growth_rate(capsys, t2_family_path):
    assert run(["family", "--file", str(t2_family_path), "--growth-rate"]) == 0

    out = capsys.readouterr().out
    assert "growth rate: -1 / (1 + 2*T + T^2)" in out
    assert "alexander limit" not in out


def test_family_report(capsys, t2_family_path):
    args = ["family", "--file", str(t2_family_path), "--report", "--t-max", "2", "--json"]
    assert run(args) == 0

    data = json.loads(capsys.readouterr().out)
    assert [row["depth"] for row in data["report"]["d_t"]] == [1, 5, 6]
    assert data["report"]["stabilizing"] is True


def test_family_defaults(capsys, t2_family_data):
    assert run(["family", "--data", json.dumps(t2_family_data), "--json"]) == 0

    data = json.loads(capsys.readouterr().out)
    assert data["family"]["name"] == "T(2,2t+1)"
    assert load_dict(data["family"]) == load_dict(t2_family_data)
    assert data["alexander_limit"] == "1 / (1 + T)"
    assert data["growth_rate"] == "-1 / (1 + 2*T + T^2)"

    assert run(["family", "--data", json.dumps(data["family"]), "--json"]) == 0
    assert json.loads(capsys.readouterr().out) == data


def test_verify_only(capsys):
    assert run(["verify", "--only", "bad-multicycles", "--only", "infinite-twist"]) == 0
    assert capsys.readouterr().out.splitlines()[-1] == "11 pass, 0 fail, 0 finding, 0 skip"


def test_verify_only_json(capsys):
    assert run(["verify", "--only", "infinite-twist", "--only", "bad-multicycles", "--json"]) == 0

    results = json.loads(capsys.readouterr().out)["results"]
    assert [r["check"] for r in results] == ["bad-multicycles"] * 3 + ["infinite-twist"] * 8
    assert {r["status"] for r in results} == {"pass"}


def test_verify_failure(capsys):
    corpus_data = load_corpus().asdict()
    corpus_data["knots"] = corpus_data["knots"][1:2]
    corpus_data["knots"][0]["rho1"]["coefficients"][0] = 7

    with tempfile.TemporaryDirectory("w") as temp_dir:
        path = Path(temp_dir) / "corpus.json"
        with path.open("w") as f:
            json.dump(corpus_data, f)

        assert run(["verify", "--only", "golden-values", "--corpus", str(path), "--json"]) == 3

    data = json.loads(capsys.readouterr().out)
    assert data["ok"] is False
    assert data["counts"]["fail"] > 0


@pytest.mark.parametrize(
    "argv",
    [
        [],
        ["invariants"],
        ["invariants", "--braid", "1 1 1", "--data", "{}"],
        ["invariants", "--braid", "1 x 1"],
        ["invariants", "--braid", "1 1 1", "--unknown"],
        ["burau"],
        ["family", "--data", '{"n": 2, "word": [1]}'],
        ["verify", "--only", "no-such-check"],
    ],
)
def test_usage_errors(argv, capsys):
    assert run(argv) == 2


def test_computation_error(capsys):
    assert run(["chain", "--braid", "1 1 1", "--cartier-foata", "--max-states", "2"]) == 1
    assert "pertalex: error:" in capsys.readouterr().err


# Executes the test if the file is called
if __name__ == "__main__":
    os.system("clear")
    pytest.main([__file__, "--disable-pytest-warnings", "--cache-clear"])
