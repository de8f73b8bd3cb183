import json
import os
from pathlib import Path

import pytest
from hypothesis import given, settings, strategies as st

import toricmirror

FIXTURES = Path(os.environ.get("TORICMIRROR_FIXTURE_DIR", Path(__file__).resolve().parents[2] / "fixtures"))


def test_command_list():
    assert "invert" in toricmirror.commands()
    assert len(toricmirror.commands()) == 21


def test_period_of_new4d():
    out = toricmirror.run("period", f=FIXTURES / "new4d.json", max_degree=9)
    assert out["coeffs"] == [1, 0, 0, 12, 0, 120, 540, 0, 20160, 33600]


def test_invert_from_dict():
    fx = json.loads((FIXTURES / "dp6_squares.json").read_text())
    out = toricmirror.run("invert", scaffolding=fx["scaffolding"])
    assert out["matrix"] == [[1, 0, 0, 1, 1, 0], [0, 1, 1, 0, 0, 1]]


def test_domain_error_kind():
    with pytest.raises(toricmirror.DomainError) as err:
        toricmirror.run("period", f={"vars": ["x"], "terms": []})
    assert err.value.kind == "zero_polynomial"


def test_fixtures():
    for path in sorted(FIXTURES.glob("*.json")):
        assert toricmirror.check_fixture(path)["ok"], path.name


def test_p2_period():
    assert toricmirror.period("x+y+1/(x*y)", ["x", "y"], 6) == [1, 0, 0, 6, 0, 0, 90]


@settings(max_examples=30, deadline=None)
@given(st.lists(st.tuples(st.integers(-2, 2), st.integers(-2, 2), st.integers(-3, 3)), min_size=1, max_size=5))
def test_period_matches_python_oracle(terms):
    terms = [(a, b, c) for a, b, c in terms if c != 0]
    if not terms:
        return
    poly = {}
    for a, b, c in terms:
        poly[(a, b)] = poly.get((a, b), 0) + c
    poly = {k: v for k, v in poly.items() if v}
    if not poly:
        return
    expr = "+".join(f"({c})*x^({a})*y^({b})" for (a, b), c in poly.items())
    power, want = {(0, 0): 1}, [1]
    for _ in range(4):
        nxt = {}
        for (a, b), c in power.items():
            for (d, e), k in poly.items():
                nxt[(a + d, b + e)] = nxt.get((a + d, b + e), 0) + c * k
        power = nxt
        want.append(power.get((0, 0), 0))
    assert toricmirror.period(expr, ["x", "y"], 4) == want
