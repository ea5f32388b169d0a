"""
Non-adaptive smuggler pass.

Fitness of a solution is the ratio

    (sum(direct) + prod(direct)) / (sum(inverse) + prod(inverse))

over the parameters that survive constant-column filtering. An empty group
contributes 1 to its side of the ratio.
"""

import logging
import math
from typing import Iterable, List, Sequence

from ..errors import (
    AllParametersConstant,
    EmptySpecList,
    NonFiniteResult,
    UnknownParameter,
    ZeroDenominator,
)
from ..models.population import (
    Direction,
    FitnessReport,
    Objective,
    ParameterSpec,
    Population,
    Solution,
)

logger = logging.getLogger(__name__)


def _group_term(values: Sequence[float]) -> float:
    if not values:
        return 1.0
    return math.fsum(values) + math.prod(values)


def compute_fitness(solution: Solution, active_specs: Sequence[ParameterSpec]) -> float:
    """
    Fitness of one solution over the given parameters.

    Args:
        solution: Candidate solution
        active_specs: Parameters to score on (usually the filtered set)

    Returns:
        float: The fitness ratio

    Raises:
        EmptySpecList: active_specs is empty
        UnknownParameter: a spec is not present in the solution
        ZeroDenominator: the inverse side evaluates to zero
        NonFiniteResult: either side or the ratio overflowed
    """
    if not active_specs:
        raise EmptySpecList("cannot compute fitness over an empty parameter list")

    direct: List[float] = []
    inverse: List[float] = []
    for spec in active_specs:
        try:
            value = solution.values[spec.name]
        except KeyError:
            raise UnknownParameter(spec.name) from None
        if spec.direction is Direction.DIRECT:
            direct.append(value)
        else:
            inverse.append(value)

    numerator = _group_term(direct)
    denominator = _group_term(inverse)
    if not (math.isfinite(numerator) and math.isfinite(denominator)):
        raise NonFiniteResult(f"fitness of '{solution.id}' overflowed")
    if denominator == 0:
        raise ZeroDenominator(
            f"inverse parameters of '{solution.id}' evaluate to zero; "
            "their sum plus product must be non-zero"
        )

    result = numerator / denominator
    if not math.isfinite(result):
        raise NonFiniteResult(f"fitness of '{solution.id}' is not finite ({result})")
    return result


def filter_constant_parameters(population: Population) -> List[ParameterSpec]:
    """Drop parameters that hold the same value in every solution"""
    if len(population.solutions) == 1:
        return list(population.specs)

    active = [
        spec
        for spec in population.specs
        if len({solution.values[spec.name] for solution in population.solutions}) > 1
    ]
    if not active:
        raise AllParametersConstant(
            "every parameter is constant across the population; nothing to rank on"
        )

    ignored = [spec.name for spec in population.specs if spec not in active]
    if ignored:
        logger.debug("Ignoring constant parameters: %s", ", ".join(ignored))
    return active


def order_ids(
    fitness: dict, ids: Iterable[str], objective: Objective
) -> List[str]:
    """Order ids best-first; ties keep the given order"""
    sign = -1.0 if objective is Objective.MAXIMIZE else 1.0
    indexed = list(enumerate(ids))
    indexed.sort(key=lambda item: (sign * fitness[item[1]], item[0]))
    return [solution_id for _, solution_id in indexed]


def rank(population: Population) -> FitnessReport:
    """
    Score and rank every solution of the population.

    Args:
        population: Validated solution population

    Returns:
        FitnessReport: Active parameters, fitness map, ranking and best id
    """
    active = filter_constant_parameters(population)

    fitness = {}
    for solution in population.solutions:
        fitness[solution.id] = compute_fitness(solution, active)
        logger.debug("f(%s) = %r", solution.id, fitness[solution.id])

    ranking = order_ids(fitness, population.ids, population.objective)
    return FitnessReport(
        active_params=[spec.name for spec in active],
        fitness=fitness,
        ranking=ranking,
        best=ranking[0],
        objective=population.objective,
    )
