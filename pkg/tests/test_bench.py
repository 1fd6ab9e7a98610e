"""Benchmark matrix, summary and output files."""
import csv
import math

import orjson
import pytest

from algorithms import algorithm_registry
from core.errors import BadParameterError
from harness.bench import (
    BENCH_HEADER,
    SUMMARY_HEADER,
    BenchRecord,
    cmd_bench,
    format_summary,
    summarize,
)

RAW_HEADER = (
    "algo,kind,n,seed,aspect,dist,wall_ns,pair_evals,corner_evals,"
    "eliminated_preprocess,eliminated_runtime,adjacent_scans_run"
)


def _read_csv(path):
    with open(path, newline="", encoding="utf-8") as f:
        return list(csv.DictReader(f))


def test_raw_header_is_schema_stable():
    assert ",".join(BENCH_HEADER) == RAW_HEADER


def test_bench_writes_raw_summary_and_meta(tmp_path):
    out = tmp_path / "run.csv"
    rows = cmd_bench(["brute", "hull", "fast"], [2, 100], ["uniform", "circle"], 2, out, seed=7)

    assert out.read_text().splitlines()[0] == RAW_HEADER
    raw = _read_csv(out)
    assert len(raw) == 3 * 2 * 2 * 2
    assert {r["seed"] for r in raw} == {"7", "8"}

    # every algorithm agrees on the same source
    by_source = {}
    for r in raw:
        by_source.setdefault((r["kind"], r["n"], r["seed"]), set()).add(float(r["dist"]))
    for dists in by_source.values():
        assert max(dists) - min(dists) <= 1e-12 * max(dists)

    summary_path = tmp_path / "run_summary.csv"
    assert summary_path.read_text().splitlines()[0] == ",".join(SUMMARY_HEADER)
    summary = _read_csv(summary_path)
    assert len(summary) == len(rows) == 3 * 2 * 2
    assert all(r["reps"] == "2" and r["extrapolated"] == "" for r in summary)
    fast_rows = [r for r in summary if r["algo"] == "fast"]
    assert all(r["speedup_vs_brute"] and r["speedup_vs_hull"] for r in fast_rows)

    meta = orjson.loads((tmp_path / "run_meta.json").read_bytes())
    assert meta["seeds"] == [7, 8]
    assert meta["algos"] == ["brute", "hull", "fast"]
    assert meta["sizes"] == [2, 100]


def test_two_points_agree_everywhere(tmp_path):
    cmd_bench(["brute", "hull", "fast"], [2], ["uniform"], 1, tmp_path / "two.csv")
    raw = _read_csv(tmp_path / "two.csv")
    assert len({r["dist"] for r in raw}) == 1


def test_brute_force_beyond_cap_is_extrapolated(tmp_path):
    out = tmp_path / "cap.csv"
    rows = cmd_bench(["brute", "fast"], [200, 400], ["uniform"], 1, out, n_max=300)

    raw = _read_csv(out)
    assert not any(r["algo"] == "brute" and r["n"] == "400" for r in raw)
    assert all("*" not in ",".join(r.values()) for r in raw)

    at_400 = {r.algo: r for r in rows if r.n == 400}
    assert at_400["brute"].extrapolated == "*"
    assert at_400["brute"].reps == 0
    assert at_400["brute"].median_pair_evals == 400 * 399 // 2
    assert at_400["fast"].extrapolated == "*"
    assert not math.isnan(at_400["brute"].dist)

    at_200 = {r.algo: r for r in rows if r.n == 200}
    assert at_200["fast"].extrapolated == ""
    expected = at_200["brute"].median_wall_ns * (400 * 399) / (200 * 199)
    assert at_400["brute"].median_wall_ns == pytest.approx(expected)

    assert "*" in format_summary(rows)


def test_summary_medians():
    records = [
        BenchRecord("fast", "uniform", 10, s, 1.0, 1.0, wall_ns, pair_evals=evals)
        for s, wall_ns, evals in [(1, 30, 5), (2, 10, 9), (3, 20, 1)]
    ]
    (row,) = summarize(records, ["fast"])
    assert (row.reps, row.median_wall_ns, row.median_pair_evals) == (3, 20, 5)
    assert row.speedup_vs_brute is None


@pytest.mark.parametrize("kwargs", [
    dict(algos=["fast"], sizes=[10], kinds=["uniform"], reps=0),
    dict(algos=["fast"], sizes=[1], kinds=["uniform"], reps=1),
    dict(algos=["fast"], sizes=[], kinds=["uniform"], reps=1),
    dict(algos=["fast"], sizes=[10], kinds=["file"], reps=1),
    dict(algos=["quantum"], sizes=[10], kinds=["uniform"], reps=1),
])
def test_bad_parameters(tmp_path, kwargs):
    with pytest.raises(BadParameterError):
        cmd_bench(out_path=tmp_path / "bad.csv", **kwargs)
    assert not (tmp_path / "bad.csv").exists()


def test_registry_order_is_column_order():
    assert algorithm_registry.names() == ["brute", "hull", "fast"]
