import pytest

from hilbgit.suites import SUITES, l_P, run_suite


def test_unknown_suite():
    with pytest.raises(KeyError):
        run_suite("nope")


def test_duality_suite():
    res = run_suite("duality", {"r": 2, "d": [2, 3, 4]})
    assert res.ok and res.summary["total"] == 6 + 10 + 15 + 3


def test_regularity_suite_example():
    res = run_suite("regularity", {"r": [2, 3]})
    assert res.ok and res.summary["total"] == 2 * 14
    for case in res.cases:
        assert case["got"]["worst"] == case["expected"]["worst"]


def test_useless_suite_both_directions():
    res = run_suite("useless")
    assert res.ok
    assert [(c["params"]["spec"], c["got"]) for c in res.cases] == [("const:3", "all"), ("goodsit:1,0", "none")]


@pytest.mark.parametrize("name", ["opt1", "general1", "maximality", "futaki", "murai-iff-r2", "sharpness"])
def test_default_grids_pass(name):
    res = run_suite(name)
    assert res.summary["total"] > 0
    assert res.ok, [c for c in res.cases if not c["pass"]]


@pytest.mark.slow
def test_unchanged_default_grid():
    res = run_suite("unchanged")
    assert res.ok and res.summary["failed"] == 0


def test_budget_is_per_case():
    res = run_suite("duality", {"r": 2, "d": 4, "budget": 200})
    statuses = {c["status"] for c in res.cases}
    assert statuses == {"pass", "budget"}
    assert res.exit_code() == 3


def test_residual_level():
    assert l_P(2, 0, 3) == 1
    assert l_P(2, 1, 1) == 0
    assert l_P(3, 2, 0) == -1
    assert set(SUITES) >= {"duality", "murai-iff-r2"}
