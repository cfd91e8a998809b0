import json
from fractions import Fraction

import pytest

import affinv


def test_level_one_modular_data(tmp_path):
    md = affinv.smat(1, cache_dir=str(tmp_path))
    assert md["verification"]["passed"]
    assert md["weights"] == [[1, 1], [1, 2], [2, 1]]
    assert md["t_exponents"][0] == "-1/12"
    assert (tmp_path / "smat_k1.json").exists()


def test_named_invariants_verify():
    for level, name in [(5, "E5"), (9, "E9_2"), (6, "D^C")]:
        report = affinv.verify_invariant(affinv.build_invariant(level, name))
        assert report["passed"], (level, name)


def test_broken_invariant_fails():
    x = affinv.build_invariant(5, "E5")
    x["entries"][0][2] = 2
    report = affinv.verify_invariant(x)
    assert not report["passed"]
    assert not report["p1"]


def test_enumerate_level_one():
    result = affinv.enumerate_invariants(1)
    assert result["count"] == 2
    assert result["complete"]


def test_guard_exceeded_carries_partial_results():
    with pytest.raises(affinv.GuardExceeded) as info:
        affinv.enumerate_invariants(9, guard_nodes=5)
    payload = json.loads(str(info.value))
    assert "completed_subtrees" in payload


def test_classify_level_five():
    report = affinv.classify(5)
    verdicts = {v["name"]: v for v in report["verdicts"]}
    assert verdicts["E5"]["status"] == "conformal_embedding"
    assert verdicts["E5"]["target"] == {"label": "A5", "level": 1}
    assert verdicts["E5^C"]["witness"] == [[1, 3], [3, 1]]


def test_embedding_and_catalog():
    check = affinv.embedding_check(21, "E7")
    assert check["verdict"] == "ok"
    assert check["grade1_dim"] == 133
    labels = {a["label"]: a["dim"] for a in affinv.catalog()}
    assert labels["E6"] == 78


def test_weights():
    assert len(affinv.dominant_weights(5)) == 21
    assert affinv.conformal_weight(5, 2, 2) == Fraction(1)
    with pytest.raises(IndexError):
        affinv.conformal_weight(3, 2, 2)
    with pytest.raises(ValueError):
        affinv.build_invariant(4, "E5")
