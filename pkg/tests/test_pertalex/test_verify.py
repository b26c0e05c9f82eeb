# Copyright The pertalex contributors
# SPDX-License-Identifier: Apache-2.0

import os
import sys
from pathlib import Path

import pytest

sys.path.insert(1, str(Path(__file__).parent.parent.parent))

import pertalex
from pertalex.corpus import Corpus
from pertalex.verify import CheckResult, available_checks

CHECK_NAMES = [
    "alexander-limit",
    "bad-multicycles",
    "burau-closed-forms",
    "cartier-foata",
    "conjectures",
    "contraction",
    "golden-values",
    "growth-rate",
    "infinite-twist",
    "invariance",
    "rational-route",
    "stabilization",
    "t1-laws",
    "walk-oracle",
]


def small_corpus(rho1_coefficients=(-1, 2, -2, 2, -1), positive_mirror=False) -> Corpus:
    knots = [
        {
            "name": "trefoil",
            "positive": True,
            "presentations": [
                {"braid": {"n": 2, "word": [1, 1, 1]}, "cuts": [1, 2]},
                {"braid": {"n": 3, "word": [1, 2, 1, 2]}, "cuts": [2]},
            ],
            "alexander": {"lowest": -1, "coefficients": [1, -1, 1]},
            "rho1": {"lowest": -2, "coefficients": list(rho1_coefficients)},
        }
    ]
    if positive_mirror:
        knots.append(
            {
                "name": "mirror trefoil, wrongly claimed positive",
                "positive": True,
                "presentations": [{"braid": {"n": 2, "word": [-1, -1, -1]}}],
            }
        )
    families = [
        {
            "name": "T(2,2t+1)",
            "family": {"m": 2, "prefix": [1], "suffix": [], "slot": [1, 2]},
            "alexander_limit": {
                "num": {"lowest": 0, "coefficients": [1]},
                "den": {"lowest": 0, "coefficients": [1, 1]},
            },
            "growth_rate": {
                "num": {"lowest": 0, "coefficients": [-1]},
                "den": {"lowest": 0, "coefficients": [1, 2, 1]},
            },
            "stabilization": {"t_max": 2, "r0": 6},
        }
    ]
    return Corpus.fromdict({"knots": knots, "families": families})


def test_available_checks():
    assert list(available_checks()) == CHECK_NAMES


@pytest.mark.parametrize("name", CHECK_NAMES)
def test_every_check_passes(name):
    report = pertalex.verify(small_corpus(), only=name)

    assert report.ok, report.to_text()
    assert all(r.check == name for r in report.results)


def test_wrong_golden_value():
    report = pertalex.verify(small_corpus(rho1_coefficients=(-1, 2, -3, 2, -1)), "golden-values")

    assert not report.ok
    assert len(report.failures) == 3
    assert report.failures[0].expected == "-T^-2 + 2*T^-1 - 3 + 2*T - T^2"
    assert report.failures[0].actual == "-T^-2 + 2*T^-1 - 2 + 2*T - T^2"
    assert "[   fail] golden-values: trefoil" in report.to_text()


def test_walk_oracle_reaches_interior_entries():
    report = pertalex.verify(small_corpus(), "walk-oracle")
    pairs = {r.subject.split(": walks ")[1] for r in report.results}
    presentations = {r.subject.split(": walks ")[0] for r in report.results}

    assert report.ok, report.to_text()
    assert len(presentations) == 2
    assert len(pairs) > len(presentations)


def test_conjecture_finding():
    report = pertalex.verify(small_corpus(positive_mirror=True), ["conjectures"])
    statuses = {r.subject: r.status for r in report.results}

    assert statuses["trefoil"] == "pass"
    assert statuses["mirror trefoil, wrongly claimed positive"] == "finding"
    assert not report.ok
    assert report.counts()["finding"] == 1


def test_skipped_results():
    report = pertalex.verify(small_corpus(), only="cartier-foata")
    skipped = [r for r in report.results if r.status == "skip"]

    # The 4-letter trefoil closes to 9 strands, within the guard.
    assert skipped == []
    assert report.counts()["pass"] == 2


def test_skip_is_not_a_failure():
    result = CheckResult("c", "s", passed=False, actual="too large", skipped=True)

    assert result.status == "skip"


def test_asdict():
    data = pertalex.verify(small_corpus(), only=["bad-multicycles"]).asdict()

    assert data["ok"] is True
    assert data["counts"] == {"pass": 3, "fail": 0, "finding": 0, "skip": 0}
    assert [r["subject"] for r in data["results"]] == ["two petals", "three petals", "shared path"]


def test_unknown_check():
    with pytest.raises(ValueError) as e:
        pertalex.verify(small_corpus(), only=["golden-value"])

    assert "golden-values" in str(e.value)


def test_shipped_corpus():
    report = pertalex.verify()

    assert report.ok, report.to_text()


# Executes the test if the file is called
if __name__ == "__main__":
    os.system("clear")
    pytest.main([__file__, "--disable-pytest-warnings", "--cache-clear"])
