"""Command line: subcommands, output formats and exit codes."""
import orjson
import pytest

import config
import main as cli
from datagen import PointSource
from harness.suites import VerifyCase, coincident_points

JSON_KEYS = {
    "dist", "sq_dist", "witness_i", "witness_j",
    "pair_evals", "corner_evals", "candidate_pair_evals",
    "eliminated_preprocess", "eliminated_runtime", "survivors",
    "adjacent_scans_run", "gates_skipped", "early_exit",
}


@pytest.fixture
def uniform_csv(tmp_path):
    path = tmp_path / "u.csv"
    assert cli.main(["generate", "--kind", "uniform", "--n", "1000", "--seed", "42", "--out", str(path)]) == 0
    return path


def test_generate_then_run_json(uniform_csv, capsys):
    capsys.readouterr()
    assert cli.main(["run", "--algo", "fast", "--in", str(uniform_csv), "--json"]) == 0
    out = capsys.readouterr().out.strip()
    assert "\n" not in out
    report = orjson.loads(out)
    assert set(report) == JSON_KEYS
    assert report["witness_i"] < report["witness_j"]
    assert report["dist"] ** 2 == pytest.approx(report["sq_dist"], rel=1e-15)

    assert cli.main(["run", "--algo", "brute", "--in", str(uniform_csv), "--json"]) == 0
    brute = orjson.loads(capsys.readouterr().out)
    assert brute["sq_dist"] == report["sq_dist"]


def test_run_human_report_and_fast_switches(uniform_csv, capsys):
    capsys.readouterr()
    assert cli.main(["run", "--algo", "fast", "--in", str(uniform_csv), "--no-prefilter", "--no-gates"]) == 0
    out = capsys.readouterr().out
    assert out.startswith("algo:      fast")
    assert "witness:" in out and "pair_evals:" in out


def test_generate_binary(tmp_path, capsys):
    path = tmp_path / "c.bin"
    assert cli.main(["generate", "--kind", "circle", "--n", "64", "--out", str(path)]) == 0
    assert path.read_bytes()[:4] == b"MXD2"
    assert cli.main(["run", "--algo", "hull", "--in", str(path), "--json"]) == 0
    assert orjson.loads(capsys.readouterr().out)["dist"] == pytest.approx(2.0, rel=1e-12)


@pytest.mark.parametrize("argv", [
    [],
    ["run"],
    ["run", "--algo", "quantum", "--in", "x.csv"],
    ["generate", "--kind", "uniform", "--n", "ten", "--out", "x.csv"],
    ["bench", "--sizes", "1.5", "--out", "x.csv"],
])
def test_usage_errors(argv):
    assert cli.main(argv) == 2


def test_help_is_success():
    assert cli.main(["--help"]) == 0


def test_parse_error_exits_two(tmp_path):
    path = tmp_path / "bad.csv"
    path.write_text("0,0\n1,notanum\n")
    assert cli.main(["run", "--algo", "brute", "--in", str(path)]) == 2


def test_too_few_points_exits_two(tmp_path):
    path = tmp_path / "one.csv"
    path.write_text("0,0\n")
    assert cli.main(["run", "--algo", "fast", "--in", str(path)]) == 2


def test_bad_generator_parameter_exits_two(tmp_path):
    assert cli.main(["generate", "--kind", "uniform", "--n", "0", "--out", str(tmp_path / "z.csv")]) == 2


def test_verify_passes_and_fails(monkeypatch, capsys):
    suite = [VerifyCase.from_source(PointSource("gaussian", 100, 1)),
             VerifyCase("coincident(n=5)", lambda: coincident_points(5, 1))]
    monkeypatch.setattr(cli, "build_suite", lambda name: suite)
    assert cli.main(["verify", "--suite", "quick", "--workers", "2"]) == 0
    assert capsys.readouterr().out.splitlines()[-1] == "2 passed, 0 failed"

    bad = suite + [VerifyCase("single", lambda: coincident_points(1, 1))]
    monkeypatch.setattr(cli, "build_suite", lambda name: bad)
    assert cli.main(["verify"]) == 1


def test_invalid_config_refuses_verify(monkeypatch):
    monkeypatch.setattr(config, "VERIFY_WORKERS", 0)
    assert config.validate_config() == ["VERIFY_WORKERS must be at least 1"]
    assert cli.main(["verify", "--suite", "quick"]) == 2


def test_bench_prints_summary(tmp_path, capsys):
    out = tmp_path / "b.csv"
    argv = ["bench", "--algos", "fast,hull", "--kinds", "uniform", "--sizes", "100,2e2", "--reps", "1", "--out", str(out)]
    assert cli.main(argv) == 0
    printed = capsys.readouterr().out
    assert printed.splitlines()[0].startswith("algo")
    assert (tmp_path / "b_summary.csv").exists()
    assert (tmp_path / "b_meta.json").exists()
