import json
from pathlib import Path

import pytest

import eqk

SPECS = Path(__file__).resolve().parents[2] / "specs"


def load(name):
    return json.loads((SPECS / name).read_text())


def test_describe_pgl6():
    d = eqk.run(load("pgl6_wonderful.json"), "describe")
    assert d["orders"] == {"W": 720, "W_L": 8, "W_H": 48, "W_G/H": 6}
    assert d["delta_L"] == ["a1", "a3", "a5"]
    assert [g["root"] for g in d["restricted_simple_roots"]] == [[1, 2, 1, 0, 0], [0, 0, 1, 2, 1]]
    assert len(d["fan"]["cones"]) == 4


def test_variety_object():
    v = eqk.Variety(load("pgl6_split.json"))
    assert v.rank == 5 and v.restricted_rank == 2
    assert v.delta_L == [0, 2, 4]
    assert v.fixed_points("X")["count"] == 180
    assert v.fixed_points("Y")["count"] == 12
    assert v.curves("Y")["count"] == 12
    assert v.presentation()["ok"]


def test_splitting_sl4():
    r = eqk.run(load("sl4_wonderful.json"), "splitting-check")
    assert r["splitting_exists"] is True
    assert r["WL_invariant_splitting_exists"] is False


def test_check_kg_constant_and_witness():
    spec = load("pgl6_wonderful.json")
    assert eqk.run(spec, "check-kg")["member"] is True
    v = eqk.Variety(spec)
    # e^{a2} is not W_L-invariant
    bad = v.check_kg([{"terms": [{"exp": [0, 1, 0, 0, 0], "coef": 1}]}])
    assert bad["member"] is False and bad["witness"]["rule"] == "W_L-invariance"


def test_congruent_mod():
    one = {"terms": [{"exp": [0, 0], "coef": 1}]}
    e = {"terms": [{"exp": [2, 0], "coef": 1}]}
    assert eqk.congruent_mod(e, one, [1, 0])
    assert not eqk.congruent_mod(e, one, [0, 1])
    assert eqk.congruent_mod(e, one, [2, 0])
    assert not eqk.congruent_mod({"terms": [{"exp": [1, 0], "coef": 1}]}, one, [2, 0])


def test_errors_are_raised():
    with pytest.raises(eqk.EqkError, match="NotInvolution"):
        eqk.run({"type": "A2", "theta_matrix": [[1, 1], [0, 1]]}, "describe")
    with pytest.raises(eqk.EqkError, match="NotInvolution"):
        eqk.Variety({"type": "A2", "theta_matrix": [[1, 1], [0, 1]]})


def test_verify_group_a2():
    res = eqk.Variety(load("group_a2_wonderful.json")).verify(samples=20)
    assert [r["id"] for r in res] == list(range(1, 9))
    assert all(r["passed"] for r in res), res
