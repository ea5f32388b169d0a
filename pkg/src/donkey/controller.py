"""
Donkey mode: keep the smuggler's best solution in use while fitness changes.

Every transition takes a DonkeyState and returns a new one. Face&Suicide and
Face&Support choose their helper from the frozen snapshot and never
re-evaluate the population; only Run re-ranks.
"""

import logging
from typing import Dict, List, Sequence, Tuple

from ..errors import SingleSolution, UnknownParameter, UnknownSolution
from ..fitness.engine import compute_fitness, order_ids, rank
from ..models.donkey import DonkeyState, FitnessEvent, Mode, Reaction
from ..models.population import Objective, ParameterSpec, Population

logger = logging.getLogger(__name__)

RESTORE_TOLERANCE = 1e-9


def _evolve(state: DonkeyState, **changes) -> DonkeyState:
    """New state with the given fields replaced; invariants are re-checked"""
    return DonkeyState(**{**dict(state), **changes})


def _ranked_specs(state: DonkeyState, population: Population) -> List[ParameterSpec]:
    return [population.spec(name) for name in state.active_params]


def _scoring_specs(state: DonkeyState, population: Population) -> List[ParameterSpec]:
    """
    Ranked parameters plus any parameter that has stopped being constant.

    A column ignored at ranking time because every solution shared its value
    counts again as soon as an event makes it differ.
    """
    return [
        spec
        for spec in population.specs
        if spec.name in state.active_params
        or len({solution.values[spec.name] for solution in population.solutions}) > 1
    ]


def _score(population: Population, specs: Sequence[ParameterSpec]) -> Dict[str, float]:
    return {solution.id: compute_fitness(solution, specs) for solution in population.solutions}


def _beaten(current: Dict[str, float], lead: str, objective: Objective) -> bool:
    return any(
        _better(value, current[lead], objective)
        for solution_id, value in current.items()
        if solution_id != lead
    )


def _better(a: float, b: float, objective: Objective) -> bool:
    """True when a is strictly better than b"""
    return a > b if objective is Objective.MAXIMIZE else a < b


def initialize(population: Population, policy: Reaction = Reaction.RUN) -> DonkeyState:
    """Run the smuggler on the population and hand its best to the donkey"""
    report = rank(population)
    logger.info("Smuggler chose %s (f=%r)", report.best, report.fitness[report.best])
    return DonkeyState(
        population=population,
        snapshot=report.fitness,
        active_params=report.active_params,
        original_best=report.best,
        active_set=[report.best],
        mode=Mode.NORMAL,
        policy=policy,
        current=report.fitness,
    )


def apply_changes(population: Population, event: FitnessEvent) -> Population:
    """Population with the event's parameter values written into its target"""
    if event.target not in population.ids:
        raise UnknownSolution(event.target)
    for name in event.changes:
        if name not in population.spec_names:
            raise UnknownParameter(name)
    if not event.changes:
        return population
    return population.with_solutions(
        [
            solution.with_values(event.changes) if solution.id == event.target else solution
            for solution in population.solutions
        ]
    )


def observe(state: DonkeyState, event: FitnessEvent) -> Tuple[DonkeyState, bool]:
    """
    Apply a fitness-changing event and check the solution in use.

    Returns:
        (new state, drop_detected): a drop is reported when another solution
        now strictly beats the leading active solution, or the leading active
        solution is strictly worse than its snapshot fitness.

    Solutions are compared over the ranked parameters plus any parameter the
    changes made non-constant; the snapshot comparison stays on the ranked
    parameters so both sides use the same scale.
    """
    population = apply_changes(state.population, event)
    ranked = _ranked_specs(state, population)
    scoring = _scoring_specs(state, population)
    current = _score(population, scoring)

    objective = population.objective
    lead = order_ids(current, state.active_set, objective)[0]
    beaten = _beaten(current, lead, objective)
    if len(scoring) == len(ranked):
        baseline = current[lead]
    else:
        baseline = compute_fitness(population.solution(lead), ranked)
    worsened = _better(state.snapshot[lead], baseline, objective)
    drop = beaten or worsened
    if drop:
        logger.info(
            "Fitness drop on %s (f=%r, snapshot=%r, beaten=%s)",
            lead,
            current[lead],
            state.snapshot[lead],
            beaten,
        )
    return _evolve(state, population=population, current=current), drop


def runner_up(snapshot: Dict[str, float], best: str, ids: Sequence[str]) -> str:
    """
    The solution closest in fitness to the best one.

    Minimizes |f(x_i) - f(best)| over i != best; with an extremal best this is
    the second-ranked solution in either objective direction. Ties go to the
    earlier id.
    """
    candidates = [solution_id for solution_id in ids if solution_id != best]
    if not candidates:
        raise SingleSolution(f"'{best}' has no alternative solution")
    reference = snapshot[best]
    return min(
        enumerate(candidates),
        key=lambda item: (abs(snapshot[item[1]] - reference), item[0]),
    )[1]


def react_run(state: DonkeyState) -> DonkeyState:
    """Re-rank the current population and adopt its best as the new original"""
    new_state = initialize(state.population, state.policy)
    logger.info("Run: best %s -> %s", state.original_best, new_state.original_best)
    return new_state


def react_suicide(state: DonkeyState) -> DonkeyState:
    """Substitute the snapshot runner-up for the degraded best"""
    replacement = runner_up(state.snapshot, state.original_best, state.population.ids)
    logger.info("Face&Suicide: %s replaced by %s", state.original_best, replacement)
    return _evolve(
        state,
        active_set=[replacement],
        mode=Mode.SUICIDE_SUBSTITUTED,
        support_fitness=None,
    )


def react_support(state: DonkeyState) -> DonkeyState:
    """Keep the best and add the snapshot runner-up beside it"""
    support = runner_up(state.snapshot, state.original_best, state.population.ids)
    combined = state.snapshot[state.original_best] + state.snapshot[support]
    logger.info(
        "Face&Support: %s supported by %s (combined f=%r)",
        state.original_best,
        support,
        combined,
    )
    return _evolve(
        state,
        active_set=[state.original_best, support],
        mode=Mode.SUPPORTED,
        support_fitness=combined,
    )


def react(state: DonkeyState, reaction: Reaction) -> DonkeyState:
    if reaction is Reaction.RUN:
        return react_run(state)
    if reaction is Reaction.FACE_AND_SUICIDE:
        return react_suicide(state)
    return react_support(state)


def try_restore(state: DonkeyState) -> DonkeyState:
    """
    Put the original best back in sole use once its fitness has recovered.

    Recovery means the best is back to its snapshot fitness over the ranked
    parameters. While other parameters vary it must also lead the population
    over those.
    """
    if state.mode is Mode.NORMAL:
        return state

    best = state.original_best
    population = state.population
    objective = population.objective
    ranked = _ranked_specs(state, population)
    fitness = compute_fitness(population.solution(best), ranked)
    reference = state.snapshot[best]
    epsilon = RESTORE_TOLERANCE * max(1.0, abs(reference))
    if objective is Objective.MAXIMIZE:
        recovered = fitness >= reference - epsilon
    else:
        recovered = fitness <= reference + epsilon

    scoring = _scoring_specs(state, population)
    if recovered and len(scoring) > len(ranked):
        scored = _score(population, scoring)
        recovered = not _beaten(scored, best, objective)
        fitness = scored[best]

    if not recovered:
        logger.debug("%s not recovered yet (f=%r, snapshot=%r)", best, fitness, reference)
        return state

    logger.info("Restored %s as the best solution", best)
    return _evolve(
        state,
        active_set=[best],
        mode=Mode.NORMAL,
        support_fitness=None,
        current={**state.current, best: fitness},
    )


def dump_state(state: DonkeyState) -> str:
    """Structured text dump of the state for inspection"""
    return state.model_dump_json(indent=2)
