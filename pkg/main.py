"""
Max-Distance Toolkit - Main Entry Point
Subcommands: generate, run, verify, bench

Exit codes: 0 success, 1 verification failure, 2 usage/parse error.
stdout carries results only; logs go to stderr.
"""
import argparse
import logging
import sys
from typing import List, Optional

import orjson

import config
from algorithms import FastDiameterAlgorithm, FastDiameterOptions, algorithm_registry
from core.errors import DiameterError
from datagen import GENERATED_KINDS, PointSource, generate
from harness import build_suite, cmd_bench, cmd_verify, format_summary
from utils.point_io import FORMATS, read_points, write_points

logging.basicConfig(
    stream=sys.stderr,
    level=getattr(logging, config.LOG_LEVEL, logging.INFO),
    format='%(asctime)s - %(name)s - %(levelname)s - %(message)s'
)
logger = logging.getLogger(__name__)

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE = 0, 1, 2


def _int_list(value: str) -> List[int]:
    """'1000,1e4,100000' -> [1000, 10000, 100000]"""
    try:
        numbers = [float(v) for v in value.split(",") if v.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {value!r}")
    if not numbers or any(not x.is_integer() for x in numbers):
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {value!r}")
    return [int(x) for x in numbers]


def _name_list(value: str) -> List[str]:
    return [v.strip() for v in value.split(",") if v.strip()]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="maxdist", description="Exact 2D point-set diameter toolkit")
    parser.add_argument("-v", "--verbose", action="store_true", help="debug logging")
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("generate", help="write a seeded point cloud to a file")
    gen.add_argument("--kind", required=True, choices=GENERATED_KINDS)
    gen.add_argument("--n", required=True, type=int)
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("--aspect", type=float, default=1.0)
    gen.add_argument("--jitter", type=float, default=0.0, help="circle radial jitter")
    gen.add_argument("--sigma", type=float, default=0.05, help="clustered blob spread")
    gen.add_argument("--out", required=True)
    gen.add_argument("--format", choices=FORMATS)

    run = sub.add_parser("run", help="compute the diameter of a point file")
    run.add_argument("--algo", required=True, choices=algorithm_registry.names())
    run.add_argument("--in", dest="input", required=True)
    run.add_argument("--format", choices=FORMATS)
    run.add_argument("--json", action="store_true", help="single-line JSON report")
    run.add_argument("--no-prefilter", action="store_true", help="fast: disable the opposite-corner prefilter")
    run.add_argument("--no-gates", action="store_true", help="fast: scan every adjacent pair")

    verify = sub.add_parser("verify", help="differential check of all algorithms")
    verify.add_argument("--suite", choices=("default", "quick"), default="default")
    verify.add_argument("--workers", type=int, default=None)
    verify.add_argument("--rtol", type=float, default=None)

    bench = sub.add_parser("bench", help="benchmark matrix to csv")
    bench.add_argument("--algos", type=_name_list, default=["fast", "hull", "brute"])
    bench.add_argument("--kinds", type=_name_list, default=["uniform"])
    bench.add_argument("--sizes", type=_int_list, default=[1000, 10000])
    bench.add_argument("--reps", type=int, default=config.BENCH_REPS)
    bench.add_argument("--out", required=True)
    bench.add_argument("--aspect", type=float, default=1.0)
    bench.add_argument("--seed", type=int, default=None)
    bench.add_argument("--n-max", dest="n_max", type=int, default=None)

    return parser


# === Subcommands ===

def do_generate(args) -> int:
    src = PointSource(args.kind, args.n, args.seed, args.aspect, jitter=args.jitter, sigma=args.sigma)
    points = generate(src)
    write_points(points, args.out, args.format)
    logger.info(f"Wrote {src.describe()} to {args.out}")
    return EXIT_OK


def do_run(args) -> int:
    points = read_points(args.input, args.format)
    algorithm = algorithm_registry.get(args.algo)
    if args.algo == "fast" and (args.no_prefilter or args.no_gates):
        algorithm = FastDiameterAlgorithm(
            FastDiameterOptions(prefilter=not args.no_prefilter, adjacency_gates=not args.no_gates)
        )
    report = algorithm.compute(points)

    if args.json:
        print(orjson.dumps(report.as_dict()).decode())
        return EXIT_OK

    i, j = report.witness
    print(f"algo:      {algorithm.name}")
    print(f"points:    {len(points)}")
    print(f"distance:  {report.dist!r}")
    print(f"squared:   {report.sq_dist!r}")
    print(f"witness:   {i} {points[i].x!r},{points[i].y!r} <-> {j} {points[j].x!r},{points[j].y!r}")
    for key, value in report.counters.as_dict().items():
        print(f"{key + ':':<22} {value}")
    return EXIT_OK


def do_verify(args) -> int:
    return cmd_verify(build_suite(args.suite), rtol=args.rtol, workers=args.workers)


def do_bench(args) -> int:
    rows = cmd_bench(
        args.algos, args.sizes, args.kinds, args.reps, args.out,
        aspect=args.aspect, seed=args.seed, n_max=args.n_max,
    )
    print(format_summary(rows))
    return EXIT_OK


COMMANDS = {
    "generate": do_generate,
    "run": do_run,
    "verify": do_verify,
    "bench": do_bench,
}


def main(argv: Optional[List[str]] = None) -> int:
    """Main entry point"""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK

    if args.verbose:
        logging.getLogger().setLevel(logging.DEBUG)

    if args.command in ("verify", "bench"):
        errors = config.validate_config()
        if errors:
            logger.error(f"Config Validation Error: {errors}")
            return EXIT_USAGE

    try:
        return COMMANDS[args.command](args)
    except DiameterError as e:
        logger.error(f"{args.command} failed: {e}")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
