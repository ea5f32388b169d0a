"""
Scenario event loop.

The smuggler ranks the paths once, then every event is fed to the donkey
controller in tick order and each step is logged.
"""

import logging
from typing import Optional, Tuple

from ..donkey.controller import initialize, observe, react, react_support, try_restore
from ..errors import DsoError, TickError
from ..models.donkey import DonkeyState, FitnessEvent, Mode, Reaction
from ..models.population import Population
from ..models.scenario import EventKind, LogRecord, Scenario, SimulationLog, TimedEvent

logger = logging.getLogger(__name__)

RESTORE = "Restore"


def _record(
    tick: int,
    summary: str,
    state: DonkeyState,
    drop: bool = False,
    reaction: Optional[str] = None,
) -> LogRecord:
    return LogRecord(
        tick=tick,
        event=summary,
        fitness=dict(state.current),
        drop_detected=drop,
        reaction=reaction,
        best=state.original_best,
        active_set=list(state.active_set),
        mode=state.mode,
        support_fitness=state.support_fitness,
    )


def _restore_if_recovered(
    state: DonkeyState, event: TimedEvent
) -> Tuple[DonkeyState, Optional[str]]:
    """
    Hand the load back to a recovered original best.

    A substitute is dropped as soon as the best is back; support is only
    withdrawn by a Recovery event on the best itself.
    """
    if state.mode is Mode.NORMAL:
        return state, None
    if state.mode is Mode.SUPPORTED and not (
        event.kind is EventKind.RECOVERY and event.target == state.original_best
    ):
        return state, None
    restored = try_restore(state)
    return restored, RESTORE if restored.mode is Mode.NORMAL else None


def _step(
    state: DonkeyState, reference: Population, event: TimedEvent
) -> Tuple[DonkeyState, Population, LogRecord]:
    if event.kind is EventKind.PARAM_CHANGE:
        state, drop = observe(state, FitnessEvent(target=event.target, changes=event.changes))
        if drop:
            reaction = event.reaction or state.policy
            state = react(state, reaction)
            if reaction is Reaction.RUN:
                reference = state.population
            return state, reference, _record(event.t, event.summary(), state, True, reaction.value)
        # continuous evaluation: a recovered original takes over again
        state, taken = _restore_if_recovered(state, event)
        return state, reference, _record(event.t, event.summary(), state, False, taken)

    if event.kind is EventKind.OVERLOAD:
        if event.target != state.original_best:
            logger.warning(
                "Tick %d: overload on %s ignored, %s is the best solution",
                event.t,
                event.target,
                state.original_best,
            )
            return state, reference, _record(event.t, event.summary(), state)
        state = react_support(state)
        return (
            state,
            reference,
            _record(event.t, event.summary(), state, reaction=Reaction.FACE_AND_SUPPORT.value),
        )

    baseline = reference.solution(event.target).values
    changes = {name: baseline[name] for name in event.restore}
    changes.update(event.changes)
    state, _ = observe(state, FitnessEvent(target=event.target, changes=changes))
    state, taken = _restore_if_recovered(state, event)
    return state, reference, _record(event.t, event.summary(), state, reaction=taken)


def run(scenario: Scenario) -> SimulationLog:
    """
    Execute a scenario deterministically.

    Returns:
        SimulationLog: The initial smuggler record followed by one record per
        event

    Raises:
        TickError: any toolkit error raised while processing an event, with
        its tick
    """
    population = scenario.population
    state = initialize(population, scenario.policy)
    reference = population
    records = [_record(0, "smuggler", state)]

    for event in scenario.events:
        try:
            state, reference, record = _step(state, reference, event)
        except DsoError as e:
            raise TickError(event.t, e) from e
        logger.info(
            "Tick %d: %s -> active=%s mode=%s",
            event.t,
            record.event,
            record.active_set,
            record.mode.value,
        )
        records.append(record)

    return SimulationLog(title=scenario.title, records=records)
