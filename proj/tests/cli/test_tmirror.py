import json
import os
import subprocess
from pathlib import Path

import pytest

TMIRROR = os.environ["TMIRROR"]
FIXTURES = Path(os.environ["TORICMIRROR_FIXTURE_DIR"])
DATA = Path(os.environ["TORICMIRROR_TEST_DATA"])


def run(*args):
    return subprocess.run([TMIRROR, *map(str, args)], capture_output=True, text=True)


def ok(*args):
    p = run(*args)
    assert p.returncode == 0, p.stderr + p.stdout
    return json.loads(p.stdout)


def test_period_new4d():
    out = ok("period", "--f", FIXTURES / "new4d.json", "--max-degree", 9)
    assert out["coeffs"] == [1, 0, 0, 12, 0, 120, 540, 0, 20160, 33600]


def test_invert_dp6_squares():
    out = ok("invert", "--scaffolding", FIXTURES / "dp6_squares.json")
    assert out["matrix"] == [[1, 0, 0, 1, 1, 0], [0, 1, 1, 0, 0, 1]]
    assert out["omega"] == [1, 1]


def test_omega_override():
    out = ok("invert", "--scaffolding", FIXTURES / "new4d.json", "--omega", "3,2")
    assert out["omega"] == [3, 2]
    assert out["matrix"] == [[1, 0, 1, 0, 1, 1, 1], [0, 1, 0, 1, 0, 1, -1]]


def test_zero_polynomial_is_a_domain_error():
    p = run("period", "--f", DATA / "empty.json")
    assert p.returncode == 1
    assert json.loads(p.stdout)["error"]["kind"] == "zero_polynomial"


def test_usage_errors_exit_two():
    assert run("no-such-command").returncode == 2
    assert run("period", "--f", DATA / "malformed.json").returncode == 2
    assert run("period", "--f", DATA / "does-not-exist.json").returncode == 2
    assert run("invert", "--scaffolding", FIXTURES / "dp3.json", "--omega", "a,b").returncode == 2


def test_drop_constant():
    out = ok("forward", "--git", FIXTURES / "cubic.json", "--drop-constant")
    assert all(any(e != 0 for e in t["exp"]) for t in out["laurent"]["terms"])


def test_fixture_corpus():
    p = run("--fixtures", FIXTURES)
    assert p.returncode == 0, p.stdout
    report = json.loads(p.stdout)
    assert report["ok"]
    assert len(report["fixtures"]) == len(list(FIXTURES.glob("*.json")))


def test_every_fixture_has_provenance():
    for path in FIXTURES.glob("*.json"):
        assert json.loads(path.read_text()).get("provenance"), path.name


def test_byte_identical_output():
    a = run("secondary-fan", "--git", FIXTURES / "mm_3_4.json").stdout
    b = run("secondary-fan", "--git", FIXTURES / "mm_3_4.json").stdout
    assert a == b and a


def test_tikz_polygon_is_closed():
    p = run("newton", "--f", FIXTURES / "dp4.json", "--emit-tikz")
    assert p.returncode == 0
    lines = p.stdout.strip().splitlines()
    assert lines[0] == lines[-1]
    assert len(lines) == 5


@pytest.mark.parametrize(
    "cmd,key,fixture",
    [
        ("scaffold-validate", "scaffolding", "dp6_triangles"),
        ("scaffold-dual-check", "scaffolding", "x_3_1"),
        ("embed-check", "scaffolding", "mm_3_4"),
        ("ci-data", "scaffolding", "dp6_squares"),
        ("p-s", "scaffolding", "dp4"),
        ("mutability", "scaffolding", "x_5_5_3"),
        ("amenable-validate", "git", "p4_amenable"),
        ("amenable-tower", "git", "p4_amenable"),
        ("amenable-binomials", "git", "p4_amenable"),
        ("anticanonical", "polytope", "dp7"),
        ("secondary-fan", "git", "new4d"),
        ("fano-nef-partition", "scaffolding", "dp6_squares"),
    ],
)
def test_subcommands_succeed(cmd, key, fixture):
    ok(cmd, f"--{key}", FIXTURES / f"{fixture}.json")
