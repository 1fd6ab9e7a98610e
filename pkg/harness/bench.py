"""
Benchmark matrix

One case runs at a time. Raw rows go to a schema-stable csv; medians over
repetitions, speed-ups and extrapolated brute-force times go to a companion
summary csv; run provenance goes to a json sidecar.

Wall-clock is reported, never asserted: acceptance checks use the
instrumentation counters.
"""
import csv
import gc
import logging
import platform
import statistics
import time
from dataclasses import dataclass, asdict, fields
from pathlib import Path
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

import numpy as np
import orjson

import config
from algorithms import DiameterAlgorithm, DiameterReport, algorithm_registry
from core.errors import BadParameterError, PointIOError
from core.point_set import PointSet
from datagen import GENERATED_KINDS, PointSource, generate

logger = logging.getLogger(__name__)


@dataclass
class BenchRecord:
    algo: str
    kind: str
    n: int
    seed: int
    aspect: float
    dist: float
    wall_ns: int
    pair_evals: int = 0
    corner_evals: int = 0
    eliminated_preprocess: int = 0
    eliminated_runtime: int = 0
    adjacent_scans_run: int = 0

    @classmethod
    def from_report(cls, algo: str, src: PointSource, report: DiameterReport, wall_ns: int) -> "BenchRecord":
        c = report.counters
        return cls(
            algo, src.kind, src.n, src.seed, src.aspect, report.dist, wall_ns,
            c.pair_evals, c.corner_evals, c.eliminated_preprocess, c.eliminated_runtime, c.adjacent_scans_run,
        )


BENCH_HEADER = [f.name for f in fields(BenchRecord)]


@dataclass
class SummaryRow:
    algo: str
    kind: str
    n: int
    aspect: float
    reps: int
    median_wall_ns: float
    median_pair_evals: float
    dist: float
    speedup_vs_brute: Optional[float] = None
    speedup_vs_hull: Optional[float] = None
    extrapolated: str = ""  # "*" when the row or its brute-force reference is extrapolated


SUMMARY_HEADER = [f.name for f in fields(SummaryRow)]


def time_algorithm(algorithm: DiameterAlgorithm, points: PointSet) -> Tuple[DiameterReport, int]:
    gc.collect()
    started = time.perf_counter_ns()
    report = algorithm.compute(points)
    return report, time.perf_counter_ns() - started


# === Running ===

def run_matrix(
    algorithms: Mapping[str, DiameterAlgorithm],
    sizes: Sequence[int],
    kinds: Sequence[str],
    reps: int,
    *,
    aspect: float = 1.0,
    seed: int = 42,
    n_max: int = 100_000,
) -> List[BenchRecord]:
    """Seeds seed, seed+1, ... are shared by every algorithm of a (kind, n) cell."""
    records: List[BenchRecord] = []
    for kind in kinds:
        for n in sizes:
            for rep in range(reps):
                src = PointSource(kind, n, seed + rep, aspect)
                points = generate(src)
                for name, algorithm in algorithms.items():
                    if algorithm.quadratic and n > n_max:
                        if rep == 0:
                            logger.info(f"Skipping {name} at n={n} (> n_max={n_max}), will extrapolate")
                        continue
                    report, wall_ns = time_algorithm(algorithm, points)
                    records.append(BenchRecord.from_report(name, src, report, wall_ns))
                    logger.info(f"{name:>6} {src.describe()}: {wall_ns / 1e6:.3f} ms, pair_evals={report.counters.pair_evals}")
    return records


def summarize(records: Sequence[BenchRecord], algos: Sequence[str], quadratic: Sequence[str] = ("brute",)) -> List[SummaryRow]:
    """
    Medians per (algo, kind, n, aspect). A missing quadratic algorithm is
    extrapolated as t0 * n(n-1) / (n0(n0-1)) from its largest measured size
    n0 of the same kind and aspect.
    """
    groups: Dict[Tuple[str, str, int, float], List[BenchRecord]] = {}
    for r in records:
        groups.setdefault((r.algo, r.kind, r.n, r.aspect), []).append(r)

    cells = sorted({(r.kind, r.aspect, r.n) for r in records}, key=lambda c: (c[0], c[1], c[2]))
    rows: List[SummaryRow] = []
    for kind, aspect, n in cells:
        cell: Dict[str, SummaryRow] = {}
        for algo in algos:
            measured = groups.get((algo, kind, n, aspect))
            if measured:
                cell[algo] = SummaryRow(
                    algo, kind, n, aspect, len(measured),
                    statistics.median(r.wall_ns for r in measured),
                    statistics.median(r.pair_evals for r in measured),
                    measured[0].dist,
                )
            elif algo in quadratic:
                row = _extrapolate(groups, algo, kind, n, aspect)
                if row is not None:
                    others = [rs[0].dist for (a, k, m, asp), rs in groups.items() if (k, m, asp) == (kind, n, aspect)]
                    row.dist = others[0] if others else float("nan")
                    cell[algo] = row

        brute, hull = cell.get("brute"), cell.get("hull")
        for row in cell.values():
            if brute is not None and row.median_wall_ns > 0:
                row.speedup_vs_brute = brute.median_wall_ns / row.median_wall_ns
                if brute.extrapolated:
                    row.extrapolated = "*"
            if hull is not None and row.median_wall_ns > 0:
                row.speedup_vs_hull = hull.median_wall_ns / row.median_wall_ns
            rows.append(row)
    return rows


def _extrapolate(groups, algo: str, kind: str, n: int, aspect: float) -> Optional[SummaryRow]:
    measured_sizes = [m for (a, k, m, asp) in groups if (a, k, asp) == (algo, kind, aspect) and m < n]
    if not measured_sizes:
        return None
    n0 = max(measured_sizes)
    base = groups[(algo, kind, n0, aspect)]
    t0 = statistics.median(r.wall_ns for r in base)
    scale = (n * (n - 1)) / (n0 * (n0 - 1))
    return SummaryRow(algo, kind, n, aspect, 0, t0 * scale, n * (n - 1) // 2, float("nan"), extrapolated="*")


# === Output ===

def _companion(out_path: Path, suffix: str) -> Path:
    return out_path.with_name(f"{out_path.stem}{suffix}")


def write_records(records: Sequence[BenchRecord], out_path: Path):
    with open(out_path, "w", newline="", encoding="utf-8") as f:
        writer = csv.writer(f, lineterminator="\n")
        writer.writerow(BENCH_HEADER)
        for r in records:
            writer.writerow([repr(v) if isinstance(v, float) else v for v in asdict(r).values()])


def write_summary(rows: Sequence[SummaryRow], out_path: Path):
    with open(out_path, "w", newline="", encoding="utf-8") as f:
        writer = csv.writer(f, lineterminator="\n")
        writer.writerow(SUMMARY_HEADER)
        for row in rows:
            values = asdict(row)
            for key in ("median_wall_ns", "median_pair_evals"):
                values[key] = f"{values[key]:.0f}"
            for key in ("speedup_vs_brute", "speedup_vs_hull"):
                values[key] = "" if values[key] is None else f"{values[key]:.2f}"
            writer.writerow(values.values())


def format_summary(rows: Sequence[SummaryRow]) -> str:
    """Fixed-width rendering for the terminal."""
    lines = [f"{'algo':<6} {'kind':<10} {'n':>9} {'median ms':>12} {'pair_evals':>14} {'vs brute':>10} {'vs hull':>9}"]
    for r in rows:
        vs_brute = "" if r.speedup_vs_brute is None else f"{r.speedup_vs_brute:.1f}"
        vs_hull = "" if r.speedup_vs_hull is None else f"{r.speedup_vs_hull:.1f}"
        lines.append(
            f"{r.algo:<6} {r.kind:<10} {r.n:>9} {r.median_wall_ns / 1e6:>12.3f} "
            f"{r.median_pair_evals:>14.0f} {vs_brute:>10} {vs_hull:>9} {r.extrapolated}"
        )
    return "\n".join(lines)


def cmd_bench(
    algos: Sequence[str],
    sizes: Sequence[int],
    kinds: Sequence[str],
    reps: int,
    out_path,
    *,
    aspect: float = 1.0,
    seed: Optional[int] = None,
    n_max: Optional[int] = None,
    algorithms: Optional[Mapping[str, DiameterAlgorithm]] = None,
) -> List[SummaryRow]:
    """Run the matrix and write <out>, <out stem>_summary.csv and <out stem>_meta.json."""
    seed = config.BENCH_SEED if seed is None else seed
    n_max = config.BRUTE_N_MAX if n_max is None else n_max

    if reps < 1:
        raise BadParameterError(f"reps must be at least 1, got {reps}")
    if not sizes or min(sizes) < 2:
        raise BadParameterError("sizes must be non-empty and at least 2")
    unknown = [k for k in kinds if k not in GENERATED_KINDS]
    if unknown or not kinds:
        raise BadParameterError(f"Unknown or missing kinds {unknown} (known: {', '.join(GENERATED_KINDS)})")
    if not aspect > 0:
        raise BadParameterError(f"Aspect must be positive, got {aspect}")
    algorithms = algorithms or algorithm_registry.resolve(list(algos))

    out_path = Path(out_path)
    started = config.get_now()
    records = run_matrix(algorithms, sizes, kinds, reps, aspect=aspect, seed=seed, n_max=n_max)
    quadratic = [name for name, a in algorithms.items() if a.quadratic]
    rows = summarize(records, list(algorithms), quadratic)

    meta = {
        "started_at": started.isoformat(),
        "finished_at": config.get_now().isoformat(),
        "algos": list(algorithms),
        "kinds": list(kinds),
        "sizes": list(sizes),
        "reps": reps,
        "seeds": [seed + r for r in range(reps)],
        "aspect": aspect,
        "n_max": n_max,
        "numpy": np.__version__,
        "python": platform.python_version(),
        "machine": platform.machine(),
    }
    try:
        write_records(records, out_path)
        write_summary(rows, _companion(out_path, "_summary.csv"))
        _companion(out_path, "_meta.json").write_bytes(orjson.dumps(meta, option=orjson.OPT_INDENT_2))
    except OSError as e:
        raise PointIOError(f"Cannot write benchmark results to {out_path}: {e}") from e

    logger.info(f"Benchmark finished: {len(records)} rows written to {out_path}")
    return rows
