import json
from fractions import Fraction
from pathlib import Path

import pytest

from kpalgebra import load_problem, parse_problem
from kpalgebra.cli import run
from kpalgebra.errors import ParseError, ShapeMismatch, UnknownGenerator

PROBLEMS = Path(__file__).resolve().parent.parent / "problems"


def problem(name):
    return str(PROBLEMS / f"{name}.json")


def cli(capsys, *argv):
    code = run(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


# problem files

def test_parse_sphere_problem():
    p = parse_problem('{"generators":["x","y","z"],"levelset":"x^2+y^2+z^2-1"}')
    assert p.m == 3 and p.bracket is None
    assert p.structure().dimension == 2
    assert p.sphere_state().r2 == 1


def test_parse_flat_problem():
    p = parse_problem('{"generators":["p1","q1"],"bracket":[["0","1"],["-1","0"]]}')
    S = p.structure()
    assert S.dimension == 2 and S.gamma2.equals(1)


@pytest.mark.parametrize("text", [
    '{"generators":["x","y","z"]}',
    '{"generators":["x","y","z"],"levelset":"x","bracket":[]}',
    '{"generators":["x","x","z"],"levelset":"x"}',
    '{"generators":["x","i","z"],"levelset":"x"}',
    '{"generators":["p","q"],"bracket":[["0","1"]]}',
    '{"generators":["p","q"],"levelset":"p"}',
    '{"generators":["x","y","z"],"levelset":"1/x"}',
    '{"generators":["x","y","z"],"levelset":"x","extra":1}',
    '{"generators":["x","y","z"],"levelset":"x","state":{"kind":"sphere","r2":"-1"}}',
    '[1, 2]',
])
def test_shape_mismatch(text):
    with pytest.raises(ShapeMismatch):
        parse_problem(text)


def test_unknown_generator_has_location():
    text = '{\n  "generators": ["x","y","z"],\n  "levelset": "x^2 + w"\n}'
    with pytest.raises(UnknownGenerator) as info:
        parse_problem(text)
    assert (info.value.line, info.value.column) == (3, 22)


def test_bad_json_has_location():
    with pytest.raises(ParseError) as info:
        parse_problem('{"generators": ["x"],')
    assert info.value.line == 1 and info.value.column is not None


@pytest.mark.parametrize("name", ["sphere", "flat", "ellipsoid", "perturbed_sphere"])
def test_round_trip(name):
    p = load_problem(problem(name))
    assert parse_problem(p.serialize()) == p


def test_state_r2_must_match_levelset():
    p = load_problem(problem("sphere"))
    with pytest.raises(ShapeMismatch):
        p.sphere_state(Fraction(4))
    assert load_problem(problem("sphere_r2_4")).sphere_state().r2 == 4


# subcommands

def test_check_sphere(capsys):
    code, out, _ = cli(capsys, "check", "--problem", problem("sphere"))
    assert code == 0
    assert sum(line.startswith("PASS") for line in out.splitlines()) == 4


def test_check_perturbed_sphere(capsys):
    code, out, _ = cli(capsys, "check", "--problem", problem("perturbed_sphere"))
    assert code == 1
    assert "FAIL jacobi" in out and "(1 2 3) residual" in out


def test_check_unequal_blocks(capsys):
    code, out, _ = cli(capsys, "check", "--problem", problem("unequal_blocks"))
    assert code == 1
    assert "FAIL almost-kp" in out
    for idx in ("(1 2)", "(2 1)", "(3 4)", "(4 3)"):
        assert idx in out


def test_check_json(capsys):
    code, out, _ = cli(capsys, "check", "--problem", problem("flat"), "--json")
    data = json.loads(out)
    assert code == 0 and data["ok"]
    assert [c["name"] for c in data["checks"]][0] == "jacobi"


def test_apply_laplacian(capsys):
    code, out, _ = cli(capsys, "apply", "--problem", problem("sphere"), "--laplacian", "z")
    assert code == 0
    assert out.splitlines()[-1] == "-2*z (mod C)"


def test_apply_bracket_and_gradient(capsys):
    code, out, _ = cli(capsys, "apply", "--problem", problem("sphere"), "--bracket", "x", "y")
    assert code == 0 and out.splitlines()[0] == "bracket = 2*z"
    code, out, _ = cli(capsys, "apply", "--problem", problem("flat"), "--gradient", "p1*q1")
    assert code == 0 and out.splitlines() == ["gradient = q1", "gradient = p1"]


def test_apply_divergence(capsys):
    code, out, _ = cli(capsys, "apply", "--problem", problem("sphere"), "--divergence=-y,x,0")
    assert code == 0 and out.splitlines()[0] == "divergence = 0"


def test_curvature_sectional(capsys):
    code, out, _ = cli(capsys, "curvature", "--problem", problem("sphere"),
                       "--X=-y,x,0", "--Y=0,-z,y")
    assert code == 0
    assert "scalar = 2 (mod C)" in out and "sectional = 1 (mod C)" in out


def test_curvature_full(capsys):
    code, out, _ = cli(capsys, "curvature", "--problem", problem("flat"), "--full")
    assert code == 0
    assert not any(" : " in line for line in out.splitlines())
    code, out, _ = cli(capsys, "curvature", "--problem", problem("sphere"), "--full")
    comps = [line for line in out.splitlines() if " : " in line]
    assert comps and all(len(line.split(" : ")[0].split()) == 4 for line in comps)


def test_spectrum_and_gap(capsys):
    code, out, _ = cli(capsys, "spectrum", "--degree", "2", "--r2", "4")
    assert code == 0
    assert "basis size = 9" in out and "lambda1 = 0.5" in out and out.rstrip().endswith("PASS")
    code, out, _ = cli(capsys, "gap", "--problem", problem("sphere"), "--degree", "2")
    assert code == 0 and out.count("PASS") == 4


def test_deterministic_output(capsys):
    argv = ["gap", "--problem", problem("sphere"), "--degree", "2", "--seed", "5", "--json"]
    first = cli(capsys, *argv)
    assert cli(capsys, *argv) == first


# exit codes for bad input

def test_missing_file(capsys, tmp_path):
    code, _, err = cli(capsys, "check", "--problem", str(tmp_path / "nope.json"))
    assert code == 2 and "cannot read" in err


def test_malformed_json(capsys, tmp_path):
    path = tmp_path / "bad.json"
    path.write_text('{"generators": ["x"],')
    code, _, err = cli(capsys, "check", "--problem", str(path))
    assert code == 2 and "line 1" in err


def test_usage_errors(capsys):
    assert cli(capsys, "check")[0] == 2
    assert cli(capsys, "frobnicate")[0] == 2
    assert cli(capsys, "spectrum", "--r2", "-1")[0] == 2
