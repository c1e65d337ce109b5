import json
import os
from pathlib import Path

import pytest

import wildcat

FIXTURES = Path(os.environ.get("WILDCAT_FIXTURES", Path(__file__).resolve().parent.parent / "fixtures"))


def fixture(name):
    return (FIXTURES / name).read_text()


def test_graph_invariants():
    k4 = wildcat.Graph(fixture("k4.space"))
    assert len(k4.vertices) == 4
    assert wildcat.betti1(k4) == 3
    assert wildcat.cat_graph(k4) == 1
    assert wildcat.tc_graph(k4) == 2
    assert wildcat.zero_divisor_cuplength(k4) == 2

    circle = wildcat.Graph(["a"], [("c", "a", "a")])
    assert (wildcat.cat_graph(circle), wildcat.tc_graph(circle)) == (1, 1)
    path = wildcat.Graph(["a", "b"], [("e", "a", "b")])
    assert (wildcat.cat_graph(path), wildcat.tc_graph(path)) == (0, 0)


def test_graph_round_trip():
    k4 = wildcat.Graph(fixture("k4.space"))
    assert wildcat.Graph(k4.to_text()) == k4


def test_bad_graph_raises():
    with pytest.raises(wildcat.GraphError):
        wildcat.Graph(["a"], [("e", "a", "z")])
    with pytest.raises(wildcat.ParseError):
        wildcat.Graph("vertex a\nedge\n")


def test_plan_executes_between_queried_points():
    plan = wildcat.plan_graph(wildcat.Graph(fixture("k4.space")))
    assert plan.length == 2
    assert len(plan.rules) == 3
    run = plan.execute("vertex a", "edge cd 1/3")
    assert run["start"] == "vertex a"
    assert run["end"] == "edge cd 1/3"
    assert 0 <= run["stratum"] <= 2
    assert plan.to_json()["strata"]


def test_wild_values():
    earring = wildcat.parse_space(fixture("earring.space"))
    assert (wildcat.wrk(earring), wildcat.cat(earring), wildcat.tc(earring)) == (2, 1, 2)
    report = wildcat.info(earring)
    assert report["tc"] == 2
    assert report["scc_class"] == "none"
    selfwild = wildcat.parse_space(fixture("selfwild.space"))
    assert wildcat.cat(selfwild) == "inf"


def test_unstable_expression_raises():
    with pytest.raises(wildcat.UnstableExpressionError):
        wildcat.tc(wildcat.parse_space(fixture("unstable.space")))


def test_truncation_betti_number():
    earring = wildcat.parse_space(fixture("earring.space"))
    assert wildcat.betti1(wildcat.truncate(earring, 3)) == 3


def test_run_matches_library():
    status, out, _ = wildcat.run(["info", str(FIXTURES / "earring.space")])
    assert status == 0
    assert json.loads(out)["tc"] == 2
    status, _, err = wildcat.run(["info", str(FIXTURES / "unstable.space")])
    assert status == 3
    assert err
