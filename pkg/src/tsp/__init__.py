"""Traveling-salesman application"""

from .aco import aco_baseline, aco_run
from .heuristics import (
    alternate_paths,
    best_tours,
    brute_force_optimum,
    nearest_neighbor_tour,
    replacement_tour,
    smuggler_all_starts,
    tour_weight,
)

__all__ = [
    "aco_baseline",
    "aco_run",
    "alternate_paths",
    "best_tours",
    "brute_force_optimum",
    "nearest_neighbor_tour",
    "replacement_tour",
    "smuggler_all_starts",
    "tour_weight",
]
