import json
import logging

import pytest

from halvecut.cli import EXIT_INVALID, EXIT_OK, EXIT_USAGE, commands, main
from halvecut.cli.files import load_instance, load_result
from halvecut.core.errors import RetriesExhaustedError, SolverError
from halvecut.geom import Point


@pytest.fixture(autouse=True)
def keep_pytest_logging(monkeypatch):
    monkeypatch.setattr(commands, "setup_logging", lambda level=None: None)


def write(path, data):
    path.write_text(json.dumps(data))
    return str(path)


@pytest.fixture
def square_file(tmp_path):
    return write(tmp_path / "square.json", {
        "sets": [{"points": [[0, 0], [2, 0], [2, 2], [0, 2]], "fraction": [1, 2]}],
        "meta": {"name": "square"},
    })


def test_gen_then_guard(tmp_path, capsys):
    instance = tmp_path / "parabola.json"
    assert main(["gen", "--kind", "parabola", "--n", "4", "--fraction", "1", "--out", str(instance)]) == EXIT_OK
    loaded = load_instance(instance)
    assert loaded.instance.sets[0].points == tuple(Point(i, i * i) for i in range(1, 5))
    assert loaded.meta["name"] == "parabola-4"

    result = tmp_path / "guards.json"
    assert main(["guard", str(instance), "--out", str(result)]) == EXIT_OK
    guards = load_result(result)
    assert guards.kind == "guards" and len(guards.guards) == 1 and guards.valid

    assert main(["verify", str(instance), "--result", str(result)]) == EXIT_OK
    assert capsys.readouterr().out.strip() == "guards: valid"


def test_gen_deals_points_into_sets(capsys):
    assert main(["gen", "--kind", "grid", "--n", "4", "--sets", "2"]) == EXIT_OK
    data = json.loads(capsys.readouterr().out)
    assert [len(s["points"]) for s in data["sets"]] == [4, 4]
    assert data["sets"][0]["fraction"] == [1, 2]


def test_halve_is_reproducible(tmp_path, square_file):
    first, second = tmp_path / "r1.json", tmp_path / "r2.json"
    assert main(["halve", square_file, "--seed", "3", "--out", str(first)]) == EXIT_OK
    assert main(["halve", square_file, "--seed", "3", "--out", str(second)]) == EXIT_OK
    assert first.read_bytes() == second.read_bytes()
    result = load_result(first)
    assert result.valid and result.lines
    assert result.shear != 0 and result.stats["t"] >= 1


def test_verify_rejects_a_tampered_result(tmp_path, square_file, capsys):
    result = tmp_path / "r.json"
    assert main(["halve", square_file, "--out", str(result)]) == EXIT_OK
    assert main(["verify", square_file, "--result", str(result)]) == EXIT_OK

    data = json.loads(result.read_text())
    data["lines"] = []
    tampered = write(tmp_path / "tampered.json", data)
    assert main(["verify", square_file, "--result", tampered]) == EXIT_INVALID
    assert "lines: INVALID" in capsys.readouterr().out


def test_svg_output(tmp_path, square_file):
    figure = tmp_path / "square.svg"
    assert main(["halve", square_file, "--out", str(tmp_path / "r.json"), "--svg", str(figure), "--shade"]) == EXIT_OK
    text = figure.read_text()
    assert text.startswith("<svg") and "<circle" in text and "<line" in text


def test_cut(tmp_path, capsys):
    lines = [[[-i, 1], [1, 1], [i * i, 1]] for i in range(6)]
    path = write(tmp_path / "lines.json", {"lines": lines})
    assert main(["cut", "--lines", path, "--eps", "1/2"]) == EXIT_OK
    data = json.loads(capsys.readouterr().out)
    assert data["valid"] is True and data["stats"]["construction"] == "weak"
    assert main(["cut", "--lines", path, "--eps", "1/2", "--simple"]) == EXIT_OK


def test_cut_rejects_bad_eps(tmp_path):
    path = write(tmp_path / "lines.json", [[[0, 1], [1, 1], [0, 1]]])
    assert main(["cut", "--lines", path, "--eps", "3/2"]) == EXIT_USAGE


@pytest.mark.parametrize("content", [
    "{not json",
    json.dumps({"sets": [{"points": [[0, 0]], "fraction": [1, 1]}], "extra": 1}),
    json.dumps({"sets": [{"points": [[0.5, 0]], "fraction": [1, 1]}]}),
    json.dumps({"sets": [{"points": [[0, 0], [1, 1]], "fraction": [1, 0]}]}),
    json.dumps({"sets": [{"points": [[0, 0], [1, 1]], "fraction": [1, 4]}]}),
    json.dumps({"sets": []}),
])
def test_malformed_instances_exit_with_one_line(tmp_path, capsys, content):
    path = tmp_path / "bad.json"
    path.write_text(content)
    assert main(["halve", str(path)]) == EXIT_USAGE
    err = capsys.readouterr().err.strip()
    assert err.startswith("halvecut:") and "\n" not in err


def test_missing_file(tmp_path):
    assert main(["guard", str(tmp_path / "nope.json")]) == EXIT_USAGE


@pytest.mark.parametrize("argv", [[], ["frobnicate"], ["gen", "--kind", "hexagon", "--n", "3"], ["gen", "--kind", "grid"]])
def test_usage_errors(argv):
    assert main(argv) == EXIT_USAGE


@pytest.mark.slow
def test_halve_grid(tmp_path):
    instance = tmp_path / "grid.json"
    assert main(["gen", "--kind", "grid", "--n", "16", "--fraction", "1/2", "--out", str(instance)]) == EXIT_OK
    result = tmp_path / "r.json"
    assert main(["halve", str(instance), "--out", str(result)]) == EXIT_OK
    assert load_result(result).valid


@pytest.mark.slow
def test_calibrate(tmp_path):
    out = tmp_path / "calibration.json"
    assert main(["calibrate", "--trials", "1", "--out", str(out)]) == EXIT_OK
    assert json.loads(out.read_text())["trials"] == 1


def test_cutting_failures_exit_with_one_line(tmp_path, capsys, caplog, monkeypatch):
    def exhausted(*args, **kwargs):
        raise RetriesExhaustedError("No valid weak cutting", attempts=3)

    monkeypatch.setattr(commands, "weak_cutting", exhausted)
    path = write(tmp_path / "lines.json", {"lines": [[[1, 1], [1, 1], [0, 1]], [[1, 1], [-1, 1], [0, 1]]]})
    with caplog.at_level(logging.ERROR):
        assert main(["cut", "--lines", path, "--eps", "1/2"]) == EXIT_INVALID
    err = capsys.readouterr().err.strip()
    assert err == "halvecut: cut failed: RetriesExhaustedError: No valid weak cutting"
    assert not any(record.exc_info for record in caplog.records)


def test_solver_failures_keep_the_traceback(tmp_path, square_file, capsys, caplog, monkeypatch):
    def broken(*args, **kwargs):
        raise SolverError("Guard set failed verification")

    monkeypatch.setattr(commands, "solve_guarding", broken)
    with caplog.at_level(logging.ERROR):
        assert main(["guard", square_file]) == EXIT_INVALID
    assert "Guard set failed verification" in capsys.readouterr().err
    assert any(record.exc_info for record in caplog.records)
