import pytest

import monoidvar as mv


def test_normalize_and_decompose():
    assert mv.normalize("xxyx") == "x^2yx"
    d = mv.decompose("xtyzxy")
    assert d["dividers"] == ["t", "z"]
    assert d["blocks"] == ["x", "y", "xy"]


def test_criteria_separate_F_and_Q():
    ident = "xyx^2 = x^2yx^2"
    assert mv.criterion("Q", ident)["holds"]
    assert not mv.criterion("F", ident)["holds"]
    assert not mv.criterion("Q", "x^2yzx^2 = x^2yxzx^2")["holds"]


def test_derive_returns_a_trace():
    system = "xyx = xyx^2\nx^2y^2 = y^2x^2\nxyx^2 = x^2yx^2\n"
    r = mv.derive("xyx = x^2yx", system, len_cap=10)
    assert r["outcome"] == "found"
    assert r["trace"]["steps"]
    miss = mv.derive("x^2yzx^2 = x^2yxzx^2", system, len_cap=10)
    assert miss["outcome"] == "exhausted"
    assert "trace" not in miss


def test_catalog_checks():
    assert "Q" in mv.varieties()
    assert mv.check("Q", "xyx = x^2yx")["value"] == "true"
    assert mv.check("F", "xyx^2 = x^2yx^2")["value"] == "false"
    assert mv.includes("F", "P")["value"] == "true"


def test_rees_size():
    assert mv.rees(["xyx"])["size"] == 7
    assert len(mv.rees(["xy"], table=True)["table"]) == 5


def test_rigid_is_verified():
    r = mv.rigid("xAxBxCxDxExFxGx = xAx^2BxCxDx^2ExFxGx", 2)
    assert r["branch"] == "collapse"
    assert r["lhs_trace"]["verified"]


def test_replay_all_pass():
    assert all(o["ok"] for o in mv.replay())


def test_errors_surface_as_python_exceptions():
    with pytest.raises(Exception):
        mv.normalize("x^")
    with pytest.raises(ValueError):
        mv.criterion("nosuch", "x = x")
