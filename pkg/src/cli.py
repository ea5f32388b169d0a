"""
Command-line front end.

    dso tsp MATRIX all-starts|alternates|brute|aco|replace [START]
    dso bench FUNCTION [--runs N] [--pop N] [--seed S]
    dso route SCENARIO
    dso fitness POPULATION

Exit codes: 0 success, 2 input error, 3 degenerate data.
"""

import argparse
import logging
import sys
import time
from pathlib import Path
from typing import List, Optional, Tuple

import pydantic

from .benchmarks.functions import get_function, resolve
from .benchmarks.harness import format_stats_table, run_statistics, stats_to_csv
from .config import config
from .errors import DegenerateDataError, DsoError, ParseError, TickError
from .fitness.engine import rank
from .fitness.io import format_report, load_population, report_to_csv
from .models.population import Objective
from .models.tsp import AcoConfig
from .routing.report import report
from .routing.scenario import BUNDLED, bundled_scenario, load_scenario
from .routing.simulator import run
from .tracing.tracer import RunTracer
from .tsp.aco import aco_baseline
from .tsp.heuristics import (
    alternate_paths,
    best_tours,
    brute_force_optimum,
    replacement_tour,
    smuggler_all_starts,
)
from .tsp.io import format_tours, load_matrix, tours_to_csv

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_DEGENERATE = 3

TSP_MODES = ("all-starts", "alternates", "brute", "aco", "replace")


def _common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--format", choices=["text", "csv"], default="text")
    parser.add_argument("--out", type=Path, help="Write the report here instead of stdout")
    parser.add_argument("--time", action="store_true", help="Print wall-clock time to stderr")


def _seed(raw: str) -> int:
    """argparse type for generator seeds"""
    try:
        value = int(raw)
    except ValueError:
        raise argparse.ArgumentTypeError(f"'{raw}' is not an integer") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"seed must be non-negative, got {value}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dso", description="Donkey and Smuggler Optimization toolkit"
    )
    parser.add_argument("-v", "--verbose", action="store_true", help="Debug logging on stderr")
    sub = parser.add_subparsers(dest="subcommand", required=True)

    tsp = sub.add_parser("tsp", help="Traveling-salesman tours")
    tsp.add_argument("matrix", type=Path, help="CSV distance matrix")
    tsp.add_argument("mode", choices=TSP_MODES)
    tsp.add_argument("start", type=int, nargs="?", help="Start city for alternates/replace")
    tsp.add_argument("--best-only", action="store_true", help="all-starts: minimum-weight tours")
    tsp.add_argument(
        "--block",
        action="append",
        default=[],
        metavar="A-B",
        help="replace: unavailable directed edge (repeatable)",
    )
    tsp.add_argument("--ants", type=int, default=config.ACO_ANTS)
    tsp.add_argument("--iterations", type=int, default=config.ACO_ITERATIONS)
    tsp.add_argument("--rho", type=float, default=config.ACO_RHO)
    tsp.add_argument("--seed", type=_seed, default=config.DEFAULT_SEED)
    _common(tsp)

    bench = sub.add_parser("bench", help="Benchmark-function statistics")
    bench.add_argument("function", help="F1-F8, F11 or F13")
    bench.add_argument("--runs", type=int, default=30)
    bench.add_argument("--pop", type=int, default=1000, help="Population size per run")
    bench.add_argument("--iterations", type=int, default=1, help="Populations per run")
    bench.add_argument("--dim", type=int, default=None, help="Dimension override for F1-F8")
    bench.add_argument("--workers", type=int, default=config.BENCH_WORKERS)
    bench.add_argument("--seed", type=_seed, default=config.DEFAULT_SEED)
    _common(bench)

    route = sub.add_parser("route", help="Run a routing scenario")
    route.add_argument(
        "scenario", help=f"Scenario file, or a bundled name ({', '.join(BUNDLED)})"
    )
    _common(route)

    fitness = sub.add_parser("fitness", help="Rank a population table")
    fitness.add_argument("population", type=Path)
    fitness.add_argument("--objective", choices=[o.value for o in Objective], default=None)
    _common(fitness)

    return parser


def _parse_edge(raw: str) -> Tuple[int, int]:
    a, sep, b = raw.partition("-")
    try:
        if not sep:
            raise ValueError
        return int(a), int(b)
    except ValueError:
        raise ParseError(f"'{raw}' is not an edge like 2-5", field="--block") from None


def cmd_tsp(args: argparse.Namespace, tracer: RunTracer) -> str:
    m = load_matrix(args.matrix)
    if args.mode in ("alternates", "replace") and args.start is None:
        raise ParseError(f"{args.mode} needs a start city", field="start")

    if args.mode == "all-starts":
        tours = smuggler_all_starts(m)
        if args.best_only:
            tours = best_tours(tours)
        heading = "Path from city {start}:"
    elif args.mode == "alternates":
        tours = alternate_paths(m, args.start)
        heading = "Path {index} ="
    elif args.mode == "brute":
        tours = [brute_force_optimum(m)]
        heading = "Optimum:"
    elif args.mode == "aco":
        cfg = AcoConfig(
            n_ants=args.ants, iterations=args.iterations, rho=args.rho, seed=args.seed
        )
        tours = [aco_baseline(m, cfg)]
        heading = "ACO best:"
    else:
        blocked = [_parse_edge(raw) for raw in args.block]
        tours = [replacement_tour(m, args.start, blocked)]
        heading = "Replacement from city {start}:"

    tracer.trace_tours(args.mode, tours)
    if args.format == "csv":
        return tours_to_csv(tours)
    return format_tours(tours, heading)


def cmd_bench(args: argparse.Namespace, tracer: RunTracer) -> str:
    f = get_function(resolve(args.function), args.dim)
    stats = run_statistics(
        f,
        runs=args.runs,
        population_size=args.pop,
        base_seed=args.seed,
        iterations=args.iterations,
        workers=args.workers,
    )
    tracer.trace_benchmark([stats])
    if args.format == "csv":
        return stats_to_csv([stats])
    return format_stats_table([stats])


def cmd_route(args: argparse.Namespace, tracer: RunTracer) -> str:
    source = Path(args.scenario)
    if not source.exists() and args.scenario in BUNDLED:
        scenario = load_scenario(bundled_scenario(args.scenario))
    else:
        scenario = load_scenario(source)
    log = run(scenario)
    tracer.trace_simulation(scenario, log)
    return report(log, args.format)


def cmd_fitness(args: argparse.Namespace, tracer: RunTracer) -> str:
    objective = Objective(args.objective) if args.objective else None
    result = rank(load_population(args.population, objective=objective))
    if args.format == "csv":
        return report_to_csv(result)
    return format_report(result)


COMMANDS = {
    "tsp": cmd_tsp,
    "bench": cmd_bench,
    "route": cmd_route,
    "fitness": cmd_fitness,
}


def _exit_code(error: DsoError) -> int:
    cause = error.cause if isinstance(error, TickError) else error
    return EXIT_DEGENERATE if isinstance(cause, DegenerateDataError) else EXIT_INPUT


def main(argv: Optional[List[str]] = None) -> int:
    """Run the CLI; returns the process exit code"""
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else config.LOG_LEVEL.upper(),
        stream=sys.stderr,
        format="%(levelname)s %(name)s: %(message)s",
    )
    config.validate()

    started = time.perf_counter()
    try:
        with RunTracer() as tracer:
            output = COMMANDS[args.subcommand](args, tracer)
        if args.out:
            args.out.write_text(output, encoding="utf-8")
        else:
            sys.stdout.write(output)
    except (OSError, pydantic.ValidationError) as e:
        print(f"dso {args.subcommand}: {e}", file=sys.stderr)
        return EXIT_INPUT
    except DsoError as e:
        print(f"dso {args.subcommand}: {type(e).__name__}: {e}", file=sys.stderr)
        return _exit_code(e)

    if args.time:
        print(f"elapsed: {time.perf_counter() - started:.4f} s", file=sys.stderr)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
