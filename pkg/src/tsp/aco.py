"""
Ant colony baseline for comparison with the smuggler tours.

Four-step procedure: visibility 1/d with unit initial pheromone; ants leave
city 1 and pick the next city with probability proportional to
pheromone * visibility, by comparing a uniform draw with the cumulative
probabilities; each ant deposits 1/length on its edges; pheromone evaporates
by (1 - rho) after every iteration. No alpha/beta exponents.
"""

import logging
from typing import List

import numpy as np

from ..models.tsp import AcoConfig, AcoRun, DistanceMatrix, Tour
from .heuristics import tour_weight

logger = logging.getLogger(__name__)


def _construct(
    pheromone: np.ndarray, visibility: np.ndarray, rng: np.random.Generator
) -> List[int]:
    """One ant's closed tour, 0-based, leaving city 0"""
    n = pheromone.shape[0]
    path = [0]
    unvisited = list(range(1, n))
    while unvisited:
        current = path[-1]
        attractiveness = pheromone[current, unvisited] * visibility[current, unvisited]
        cumulative = np.cumsum(attractiveness)
        draw = rng.random() * cumulative[-1]
        index = min(int(np.searchsorted(cumulative, draw, side="right")), len(unvisited) - 1)
        path.append(unvisited.pop(index))
    path.append(0)
    return path


def aco_run(m: DistanceMatrix, cfg: AcoConfig) -> AcoRun:
    """
    Run the ant colony and keep the best tour seen.

    Args:
        m: Distance matrix
        cfg: Ant count, iterations, evaporation rate and seed

    Returns:
        AcoRun: Best tour plus best-so-far weight per iteration
    """
    rng = np.random.default_rng(cfg.seed)
    distances = m.as_array()
    visibility = np.divide(
        1.0, distances, out=np.zeros_like(distances), where=distances > 0
    )
    pheromone = np.ones_like(distances)

    best_sequence: List[int] = []
    best_weight = float("inf")
    history: List[float] = []
    for iteration in range(cfg.iterations):
        for _ in range(cfg.n_ants):
            sequence = [city + 1 for city in _construct(pheromone, visibility, rng)]
            length = tour_weight(m, sequence)
            for a, b in zip(sequence, sequence[1:]):
                pheromone[a - 1, b - 1] += 1.0 / length
            if length < best_weight:
                best_sequence, best_weight = sequence, length
                logger.debug("Iteration %d: new best %r %s", iteration, length, sequence)
        pheromone *= 1.0 - cfg.rho
        history.append(best_weight)

    return AcoRun(
        best=Tour(start=1, sequence=best_sequence, weight=best_weight), history=history
    )


def aco_baseline(m: DistanceMatrix, cfg: AcoConfig) -> Tour:
    """Best tour found by the ant colony"""
    return aco_run(m, cfg).best
