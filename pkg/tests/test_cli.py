import json
import random

import pytest

from relnorms import cli, suite
from relnorms.cli import run
from relnorms.geometry import torus
from relnorms.measures import random_measure


def out_of(capsys, argv):
    code = run(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_seminorm_on_generated_circle(tmp_path, capsys):
    code, text, _ = out_of(capsys, ["generate", "circle3"])
    assert code == 0
    path = tmp_path / "circle3.json"
    path.write_text(text)
    code, text, _ = out_of(capsys, ["seminorm", "--pair", str(path), "--degree", "1"])
    assert code == 0
    (cert,) = json.loads(text)
    assert cert["primal_value"] == cert["dual_value"] == "3"


def test_seminorm_with_explicit_chain(tmp_path, capsys):
    chain = tmp_path / "c.json"
    chain.write_text(json.dumps({"e": "-2"}))
    code, text, _ = out_of(capsys, ["seminorm", "--pair", "interval", "--degree", "1",
                                    "--chain", str(chain), "--table"])
    assert code == 0 and "2" in text.splitlines()[1]


def test_cone_table(capsys):
    code, text, _ = out_of(capsys, ["cone", "--pair", "cylinder_grid6x2", "--degree", "2",
                                    "--omega", "0,1"])
    assert code == 0
    assert "strict" in text and "36" in text and "48" in text


def test_cone_json(capsys):
    code, text, _ = out_of(capsys, ["cone", "--pair", "interval", "--degree", "1", "--json"])
    data = json.loads(text)
    assert code == 0 and data["schema"] == "cone-report/v1" and data["ok"]


def test_other_subcommands(capsys):
    assert out_of(capsys, ["straighten", "--space", "torus", "--grid", "4x4"])[0] == 0
    assert out_of(capsys, ["straighten", "--space", "cylinder", "--seed", "3", "--json"])[0] == 0
    assert out_of(capsys, ["measure", "--space", "cylinder", "--seed", "2"])[0] == 0
    code, text, _ = out_of(capsys, ["group", "--group", "s3", "--subgroup", "0,3,4", "--json"])
    assert code == 0 and [r["dim_H_b(G)"] for r in json.loads(text)["rows"]] == [1, 0, 0]


def test_measure_file(tmp_path, capsys):
    mu = random_measure(torus(2, 1), 2, random.Random(1))
    path = tmp_path / "mu.json"
    path.write_text(json.dumps(mu.to_json()))
    code, text, _ = out_of(capsys, ["measure", "--measure", str(path), "--json"])
    assert code == 0 and json.loads(text)["checks"]["theta d = d theta"]


@pytest.mark.parametrize("argv", [
    ["seminorm", "--pair", "missing.json", "--degree", "1"],
    ["seminorm", "--pair", "circle3", "--degree", "7"],
    ["cone", "--pair", "interval", "--degree", "1", "--omega", "-1"],
    ["cone", "--pair", "interval", "--degree", "1", "--omega", "x"],
    ["group", "--group", "s3", "--subgroup", "0,1,3"],
    ["straighten", "--grid", "4by4"],
    ["nonsense"],
    [],
])
def test_validation_errors_exit_1(argv, capsys):
    code, _, err = out_of(capsys, argv)
    assert code == 1 and err.startswith("relnorms:")


def test_bad_json_exit_1(tmp_path, capsys):
    path = tmp_path / "bad.json"
    path.write_text("{not json")
    assert out_of(capsys, ["seminorm", "--pair", str(path), "--degree", "0"])[0] == 1
    path.write_text(json.dumps({"degrees": [{"simplices": ["a"]}, {"simplices": ["e"],
                                                                   "faces": {"e": [[1, "b"]]}}]}))
    assert out_of(capsys, ["seminorm", "--pair", str(path), "--degree", "1"])[0] == 1


def test_deterministic_output(capsys):
    for argv in (["cone", "--pair", "cylinder_grid6x2", "--degree", "1", "--json"],
                 ["measure", "--space", "torus", "--seed", "11", "--json"],
                 ["group", "--group", "z2xz2", "--subgroup", "0,1", "--seed", "5", "--json"],
                 ["suite", "--criterion", "4,9", "--verbose"]):
        first = out_of(capsys, argv)
        second = out_of(capsys, argv)
        assert first == second and first[0] == 0


def test_suite_failure_exit_2(capsys, monkeypatch):
    fake = suite.CheckResult(1, "forced failure", passed=False)
    monkeypatch.setattr(cli, "run_all", lambda seed, only: [fake])
    assert out_of(capsys, ["suite"])[0] == 2
