"""
Random-population smuggler over the benchmark functions.

The smuggler samples a uniform population inside the search box, scores every
sample directly on the objective (minimization) and keeps the best one.
"""

import csv
import io
import logging
import math
from concurrent.futures import ThreadPoolExecutor
from typing import List, Optional, Sequence

import numpy as np

from ..errors import ValidationError
from ..models.benchmark import BenchmarkFunction, RunStatistics, SearchResult
from .functions import evaluate_many

logger = logging.getLogger(__name__)


def sample_population(
    f: BenchmarkFunction, population_size: int, seed: int, iterations: int = 1
) -> np.ndarray:
    """Uniform samples in the search box, shape (iterations * population_size, dimension)"""
    rng = np.random.default_rng(seed)
    low, high = f.bounds
    return np.concatenate(
        [
            rng.uniform(low, high, size=(population_size, f.dimension))
            for _ in range(iterations)
        ]
    )


def random_search_smuggler(
    f: BenchmarkFunction, population_size: int, seed: int, iterations: int = 1
) -> SearchResult:
    """
    Sample, score and keep the best point.

    Args:
        f: Benchmark function
        population_size: Points sampled per iteration
        seed: Generator seed
        iterations: How many times the population is regenerated

    Returns:
        SearchResult: Best point, its value and the best-so-far trace over
        every sample in sampling order
    """
    if population_size < 1:
        raise ValidationError("population_size must be at least 1")
    if iterations < 1:
        raise ValidationError("iterations must be at least 1")
    if seed < 0:
        raise ValidationError(f"seed must be non-negative, got {seed}")

    points = sample_population(f, population_size, seed, iterations)
    values = evaluate_many(f, points)
    best = int(np.argmin(values))
    return SearchResult(
        best_point=points[best].tolist(),
        best_value=float(values[best]),
        trace=np.minimum.accumulate(values).tolist(),
    )


def mean_and_stddev(values: Sequence[float]) -> tuple[float, float]:
    """Two-pass mean and population standard deviation with exact summation"""
    n = len(values)
    mean = math.fsum(values) / n
    variance = math.fsum((value - mean) ** 2 for value in values) / n
    return mean, math.sqrt(variance)


def run_statistics(
    f: BenchmarkFunction,
    runs: int,
    population_size: int,
    base_seed: int,
    iterations: int = 1,
    seeds: Optional[Sequence[int]] = None,
    workers: int = 1,
) -> RunStatistics:
    """
    Aggregate independent smuggler runs.

    Run k uses seed base_seed + k unless `seeds` is given. Runs may be spread
    over `workers` threads; results are aggregated in run order.
    """
    if runs < 1:
        raise ValidationError("runs must be at least 1")
    run_seeds: List[int] = (
        list(seeds) if seeds is not None else [base_seed + k for k in range(runs)]
    )
    if len(run_seeds) != runs:
        raise ValidationError(f"expected {runs} seeds, got {len(run_seeds)}")

    def one(seed: int) -> float:
        return random_search_smuggler(f, population_size, seed, iterations).best_value

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            bests = list(pool.map(one, run_seeds))
    else:
        bests = [one(seed) for seed in run_seeds]

    avg, stddev = mean_and_stddev(bests)
    logger.info("%s: %d runs, avg=%r stddev=%r", f.id.value, runs, avg, stddev)
    return RunStatistics(
        function=f.id,
        runs=runs,
        population_size=population_size,
        avg=avg,
        stddev=stddev,
        best_overall=min(bests),
    )


STATS_COLUMNS = ["function", "runs", "population_size", "avg", "stddev", "best_overall"]


def stats_to_csv(rows: Sequence[RunStatistics]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(STATS_COLUMNS)
    for row in rows:
        writer.writerow(
            [
                row.function.value,
                row.runs,
                row.population_size,
                repr(row.avg),
                repr(row.stddev),
                repr(row.best_overall),
            ]
        )
    return buffer.getvalue()


def format_stats_table(rows: Sequence[RunStatistics]) -> str:
    """Two lines per function, Avg then StdDev"""
    lines = [f"{'Function':<10}{'':<8}{'DSO':>16}"]
    for row in rows:
        lines.append(f"{row.function.value:<10}{'Avg':<8}{row.avg:>16.4E}")
        lines.append(f"{'':<10}{'StdDev':<8}{row.stddev:>16.4E}")
    return "\n".join(lines) + "\n"
