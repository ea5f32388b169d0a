"""
Smuggler tours for the TSP.

Nearest-neighbor tours from every start city, the alternate-path pool used as
donkey-mode replacements, and an exhaustive oracle for small instances.
"""

import itertools
import logging
from typing import Iterable, List, Sequence, Set, Tuple

from ..donkey.controller import initialize
from ..errors import AllParametersConstant, NoAvailableTour, TooLarge, ValidationError
from ..models.donkey import Reaction
from ..models.population import Direction, Objective, ParameterSpec, Population, Solution
from ..models.tsp import DistanceMatrix, Tour

logger = logging.getLogger(__name__)

BRUTE_FORCE_LIMIT = 12


def tour_weight(m: DistanceMatrix, sequence: Sequence[int]) -> float:
    """Sum of the traversed edge distances"""
    return sum(m.distance(a, b) for a, b in zip(sequence, sequence[1:]))


def _check_city(m: DistanceMatrix, city: int) -> None:
    if city not in m.cities:
        raise ValidationError(f"city {city} is outside 1..{m.n}")


def _complete_greedily(m: DistanceMatrix, path: List[int]) -> Tour:
    unvisited = [city for city in m.cities if city not in path]
    while unvisited:
        current = path[-1]
        # lowest city index wins ties
        nearest = min(unvisited, key=lambda city: (m.distance(current, city), city))
        path.append(nearest)
        unvisited.remove(nearest)
    path.append(path[0])
    return Tour(start=path[0], sequence=path, weight=tour_weight(m, path))


def nearest_neighbor_tour(m: DistanceMatrix, start: int) -> Tour:
    """Greedy tour: always move to the closest unvisited city, then return"""
    _check_city(m, start)
    return _complete_greedily(m, [start])


def smuggler_all_starts(m: DistanceMatrix) -> List[Tour]:
    """One nearest-neighbor tour per start city, in city order"""
    tours = [nearest_neighbor_tour(m, start) for start in m.cities]
    best = best_tours(tours)
    logger.info(
        "Best smuggler weight %r from start cities %s",
        best[0].weight,
        [tour.start for tour in best],
    )
    return tours


def best_tours(tours: Sequence[Tour]) -> List[Tour]:
    """The minimum-weight tours, in their original order"""
    if not tours:
        return []
    lowest = min(tour.weight for tour in tours)
    return [tour for tour in tours if tour.weight == lowest]


def alternate_paths(m: DistanceMatrix, start: int) -> List[Tour]:
    """
    Every first hop out of `start`, each completed by nearest neighbor.

    Returns exactly n-1 tours ordered by first-hop city.
    """
    _check_city(m, start)
    return [_complete_greedily(m, [start, hop]) for hop in m.cities if hop != start]


def brute_force_optimum(m: DistanceMatrix) -> Tour:
    """Exhaustive minimum over all directed tours from city 1"""
    if m.n > BRUTE_FORCE_LIMIT:
        raise TooLarge(f"{m.n} cities exceeds the brute-force limit of {BRUTE_FORCE_LIMIT}")

    best_sequence: List[int] = []
    best_weight = float("inf")
    # permutations come in lexicographic order, so the first minimum is the smallest
    for order in itertools.permutations(range(2, m.n + 1)):
        sequence = [1, *order, 1]
        weight = tour_weight(m, sequence)
        if weight < best_weight:
            best_sequence, best_weight = sequence, weight
    return Tour(start=1, sequence=best_sequence, weight=best_weight)


def replacement_tour(
    m: DistanceMatrix, start: int, unavailable: Iterable[Tuple[int, int]]
) -> Tour:
    """
    Best alternate tour that avoids the unavailable directed edges.

    The surviving alternates are handed to the donkey controller as a
    population scored on tour weight under a Minimize objective.
    """
    blocked: Set[Tuple[int, int]] = set(unavailable)
    pool = [tour for tour in alternate_paths(m, start) if not blocked & set(tour.edges())]
    if not pool:
        raise NoAvailableTour(f"every alternate tour from city {start} uses a blocked edge")

    by_id = {f"via{tour.sequence[1]}": tour for tour in pool}
    population = Population(
        specs=[ParameterSpec(name="weight", direction=Direction.DIRECT)],
        solutions=[
            Solution(id=solution_id, values={"weight": tour.weight})
            for solution_id, tour in by_id.items()
        ],
        objective=Objective.MINIMIZE,
    )
    try:
        state = initialize(population, Reaction.RUN)
    except AllParametersConstant:
        # equal weights: keep the first surviving first hop
        return pool[0]
    return by_id[state.original_best]
