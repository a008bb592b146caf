import json

import pytest
import yaml

from checker.CheckerCaller import CheckerCaller, suite_entries
from cli.main import load_config, run
from core.Errors import GroupCapError


def output(capsys):
    return json.loads(capsys.readouterr().out)


def test_analyze_hyperbolic_plane(capsys):
    assert run(["analyze", "--lattice", "U", "--signature", "--det", "--even"]) == 0
    result = output(capsys)
    assert result["sig"] == [1, 1]
    assert result["det"] == -1
    assert result["even"] is True


def test_analyze_census_and_disc(capsys):
    assert run(["-q", "analyze", "--lattice", "A2", "--census", "2", "--disc", "--milgram"]) == 0
    result = output(capsys)
    assert result["census"] == {"2": 6}
    assert result["length"] == 1
    assert result["milgram"] == 2


def test_construct_with_verify(capsys):
    assert run(["construct", "A2", "--verify"]) == 0
    result = output(capsys)
    assert result["det"] == 3
    assert result["min_norm"] == 2
    assert result["roots"] == 6
    assert result["lattice"]["gram"] == [[2, -1], [-1, 2]]


@pytest.mark.slow
def test_construct_leech(capsys):
    assert run(["construct", "leech", "--verify"]) == 0
    result = output(capsys)
    assert (result["det"], result["min_norm"], result["roots"]) == (1, -4, 0)


def test_lattice_record_round_trip(tmp_path, capsys):
    out = tmp_path / "a2.json"
    assert run(["--output", str(out), "construct", "A2"]) == 0
    assert capsys.readouterr().out == ""
    assert run(["--input", str(out), "analyze", "--det"]) == 0
    assert output(capsys)["det"] == 3
    assert run(["analyze", "--input", str(out), "--det"]) == 0
    assert output(capsys)["det"] == 3


def test_malformed_json_is_an_input_error(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert run(["--input", str(bad), "analyze", "--det"]) == 2


def test_malformed_config_is_an_input_error(tmp_path):
    bad = tmp_path / "config.json"
    bad.write_text("{\"global\": ")
    assert run(["--config", str(bad), "analyze", "--lattice", "U", "--det"]) == 2


def test_usage_errors():
    assert run(["construct"]) == 2
    assert run(["--threads", "0", "analyze", "--lattice", "U", "--det"]) == 2
    assert run(["analyze", "--det"]) == 2
    assert run(["construct", "Q7"]) == 2
    assert run(["classify", "prime", "--p", "4"]) == 2


def test_wall_check_on_standard_l2(capsys):
    root = ["0"] * 24
    root[8] = "1"
    assert run(["walls", "check", "--n", "2", "--ambient", "--divisor", ",".join(root)]) == 0
    result = output(capsys)
    assert result["wall"] is True
    assert result["clause"] == "root"


def test_wall_check_rejects_wrong_length():
    assert run(["walls", "check", "--n", "2", "--divisor", "1,0,0"]) == 2


def test_autos_coinvariant(tmp_path, capsys):
    gens = tmp_path / "gens.json"
    gens.write_text(json.dumps([[[0, 1], [1, 0]]]))
    assert run(["autos", "coinvariant", "--lattice", "A2", "--gens", str(gens)]) == 0
    result = output(capsys)
    assert result["order"] == 2
    assert result["invariant_rank"] == 1 and result["coinvariant_rank"] == 1
    assert result["torsion_index"] == 2


def test_autos_rejects_non_isometry(tmp_path):
    gens = tmp_path / "gens.json"
    gens.write_text(json.dumps([[[1, 1], [0, 1]]]))
    assert run(["autos", "coinvariant", "--lattice", "A2", "--gens", str(gens)]) == 2


def test_unknown_suite():
    assert run(["verify", "--suite", "nope"]) == 2


def _suite_config(tmp_path, expected):
    config = {"suites": {"mini": [{"path": "checker.AutosCheckers.OrderFiveCensusChecker",
                                   "params": {"expected": expected}}]}}
    path = tmp_path / "config.yaml"
    path.write_text(yaml.safe_dump(config))
    return str(path)


def test_custom_suite_passes(tmp_path, capsys):
    assert run(["--config", _suite_config(tmp_path, {0: 40, 4: 24, 8: 60}), "verify", "--suite", "mini"]) == 0
    report = output(capsys)
    assert report["passed"] is True
    assert report["checks"][0]["details"] == {"0": 40, "4": 24, "8": 60}


def test_failed_check_exits_with_one(tmp_path, capsys):
    assert run(["--config", _suite_config(tmp_path, {0: 1}), "verify", "--suite", "mini"]) == 1
    report = output(capsys)
    assert report["passed"] is False
    assert "census" in report["checks"][0]["error"]


def test_paper_suite_is_configured():
    config = load_config("")
    caller = CheckerCaller(suite_entries("paper", config))
    names = [checker.name for checker in caller.checkers]
    assert names[0] == "LeechChecker"
    assert "ClassificationChecker" in names
    assert len(names) > len(suite_entries("fast", config))


def test_checker_errors_are_reported_per_check(monkeypatch):
    entry = {"path": "checker.AutosCheckers.OrderFiveCensusChecker", "params": {}}
    caller = CheckerCaller([entry, entry])

    def exhausted():
        raise GroupCapError("group not verified finite within cap 5")

    monkeypatch.setattr(caller.checkers[0], "check", exhausted)
    report = caller.check("mini")
    assert [r.passed for r in report.results] == [False, True]
    assert report.results[0].error.startswith("GroupCapError")
    assert report.passed is False


def test_unknown_checker_path(tmp_path):
    path = tmp_path / "config.yaml"
    path.write_text(yaml.safe_dump({"suites": {"mini": [{"path": "checker.Missing.Checker"}]}}))
    assert run(["--config", str(path), "verify", "--suite", "mini"]) == 2


@pytest.mark.slow
def test_fast_suite(capsys):
    assert run(["verify", "--suite", "fast"]) == 0
    assert output(capsys)["passed"] is True
