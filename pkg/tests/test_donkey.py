"""Tests for the adaptive donkey controller"""

import pydantic
import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from src.donkey.controller import (
    dump_state,
    initialize,
    observe,
    react,
    react_run,
    react_suicide,
    react_support,
    runner_up,
    try_restore,
)
from src.errors import DsoError, SingleSolution, UnknownParameter, UnknownSolution
from src.fitness.engine import order_ids, rank
from src.models.donkey import DonkeyState, FitnessEvent, Mode, Reaction
from src.models.population import Objective
from tests.conftest import populations, rankable, single_param_population


def state_with_snapshot(fitness, best, objective=Objective.MAXIMIZE):
    """State whose snapshot is given directly, one Direct parameter per solution"""
    population = single_param_population([value / 2 for value in fitness], objective)
    snapshot = dict(zip(population.ids, fitness))
    return DonkeyState(
        population=population,
        snapshot=snapshot,
        active_params=["f"],
        original_best=best,
        active_set=[best],
        current=snapshot,
    )


def assert_consistent(state: DonkeyState):
    """Re-run the model validators on a state"""
    DonkeyState.model_validate(state.model_dump())


class TestInitialize:
    def test_best_is_argmax(self):
        state = initialize(single_param_population([3, 5, 1]))
        assert state.original_best == "s2"
        assert state.active_set == ["s2"]
        assert state.mode is Mode.NORMAL
        assert state.snapshot == {"s1": 6.0, "s2": 10.0, "s3": 2.0}

    def test_policy_is_kept(self, first_design):
        state = initialize(first_design, Reaction.FACE_AND_SUPPORT)
        assert state.policy is Reaction.FACE_AND_SUPPORT
        assert state.active_params == ["packet_delay", "cost", "transmission_speed"]


class TestObserve:
    def test_empty_event_is_a_no_op(self, first_design):
        state = initialize(first_design)
        observed, drop = observe(state, FitnessEvent(target="X1", changes={}))
        assert drop is False
        assert observed.population == state.population
        assert observed.snapshot == state.snapshot

    def test_beaten_best_is_a_drop(self):
        state = state_with_snapshot([6, 10, 2], best="s1")
        _, drop = observe(state, FitnessEvent(target="s1"))
        assert drop is True

    def test_raised_competitor_is_a_drop(self):
        state = initialize(single_param_population([3, 2, 1]))
        observed, drop = observe(state, FitnessEvent(target="s2", changes={"f": 5}))
        assert drop is True
        assert observed.current["s2"] == 10.0
        assert observed.snapshot["s2"] == 4.0

    def test_worsened_best_is_a_drop_even_when_still_leading(self):
        state = initialize(single_param_population([9, 2, 1]))
        _, drop = observe(state, FitnessEvent(target="s1", changes={"f": 8}))
        assert drop is True

    def test_improvement_is_not_a_drop(self):
        state = initialize(single_param_population([9, 2, 1]))
        _, drop = observe(state, FitnessEvent(target="s1", changes={"f": 12}))
        assert drop is False

    def test_parameter_that_stops_being_constant_counts(self, first_design):
        state = initialize(first_design)
        assert "packet_loss" not in state.active_params
        observed, drop = observe(state, FitnessEvent(target="X3", changes={"packet_loss": 90}))
        assert drop is True
        assert observed.current["X3"] == pytest.approx(32 / 6950191)
        assert observed.current["X1"] == pytest.approx(30 / 5256)
        assert observed.active_params == state.active_params

    def test_constant_change_elsewhere_is_ignored(self, first_design):
        state = initialize(first_design)
        changes = {"bandwidth": 1544, "packet_loss": 0}
        observed, drop = observe(state, FitnessEvent(target="X2", changes=changes))
        assert drop is False
        assert observed.current == state.snapshot

    def test_minimize_direction(self):
        state = initialize(single_param_population([3, 2, 1], Objective.MINIMIZE))
        assert state.original_best == "s3"
        _, drop = observe(state, FitnessEvent(target="s3", changes={"f": 1.5}))
        assert drop is True

    def test_unknown_target(self, first_design):
        with pytest.raises(UnknownSolution):
            observe(initialize(first_design), FitnessEvent(target="X9", changes={"cost": 1}))

    def test_unknown_parameter(self, first_design):
        with pytest.raises(UnknownParameter):
            observe(initialize(first_design), FitnessEvent(target="X1", changes={"latency": 1}))

    def test_non_finite_change_is_rejected(self):
        with pytest.raises(pydantic.ValidationError):
            FitnessEvent(target="X1", changes={"cost": float("inf")})

    def test_ambulance_changes_move_the_best(self, ambulance_roads):
        state = initialize(ambulance_roads)
        assert state.original_best == "X1"

        state, drop = observe(
            state, FitnessEvent(target="X1", changes={"road_condition": 3, "speed": 3})
        )
        assert drop is True
        assert state.current["X1"] == pytest.approx(1 / 27)

        state, drop = observe(
            state,
            FitnessEvent(target="X2", changes={"road_condition": 1, "cost": 2, "speed": 2}),
        )
        assert drop is True
        assert state.current["X2"] == pytest.approx(1 / 20)
        assert react_run(state).original_best == "X2"


class TestReactRun:
    def test_adopts_the_new_argmax(self):
        state = state_with_snapshot([6, 10, 2], best="s1")
        new_state = react_run(state)
        assert new_state.original_best == "s2"
        assert new_state.active_set == ["s2"]
        assert new_state.mode is Mode.NORMAL

    def test_fixed_point_without_changes(self, first_design):
        state = initialize(first_design)
        assert react_run(state).original_best == state.original_best
        assert react_run(state).snapshot == state.snapshot

    def test_leaves_substituted_mode(self, first_design):
        state = react_suicide(initialize(first_design))
        assert react_run(state).mode is Mode.NORMAL


class TestReactSuicide:
    def test_first_design_replacement_is_first_path(self, first_design):
        state = react_suicide(initialize(first_design))
        assert state.active_set == ["X1"]
        assert state.original_best == "X3"
        assert state.mode is Mode.SUICIDE_SUBSTITUTED

    def test_two_solutions_forced_choice(self):
        state = react_suicide(initialize(single_param_population([1, 4])))
        assert state.active_set == ["s1"]

    def test_smallest_difference_wins(self):
        state = react_suicide(initialize(single_param_population([9, 7, 4])))
        assert state.active_set == ["s2"]

    def test_single_solution(self):
        state = initialize(single_param_population([2]))
        with pytest.raises(SingleSolution):
            react_suicide(state)

    def test_does_not_touch_population_or_snapshot(self, first_design):
        state = initialize(first_design)
        observed, _ = observe(state, FitnessEvent(target="X3", changes={"packet_delay": 500}))
        substituted = react_suicide(observed)
        assert substituted.population == observed.population
        assert substituted.snapshot == state.snapshot


class TestReactSupport:
    def test_two_solution_arithmetic(self):
        state = react_support(initialize(single_param_population([0.15, 0.1])))
        assert state.active_set == ["s1", "s2"]
        assert state.support_fitness == pytest.approx(0.5)

    def test_ambulance_pairs_first_and_second_roads(self, ambulance_roads):
        state = react_support(initialize(ambulance_roads))
        assert state.active_set == ["X1", "X2"]
        assert state.mode is Mode.SUPPORTED
        assert state.support_fitness == pytest.approx(1 / 7 + 1 / 84)

    def test_runner_up_by_difference(self):
        state = react_support(state_with_snapshot([5, 1, 2], best="s1"))
        assert state.active_set == ["s1", "s3"]
        assert state.support_fitness == 7

    def test_single_solution(self):
        with pytest.raises(SingleSolution):
            react_support(initialize(single_param_population([2])))

    def test_snapshot_is_frozen(self, first_design):
        state = initialize(first_design)
        assert react_support(state).snapshot == state.snapshot
        assert react_support(state).population == state.population


class TestReactDispatch:
    @pytest.mark.parametrize(
        "reaction, mode",
        [
            (Reaction.RUN, Mode.NORMAL),
            (Reaction.FACE_AND_SUICIDE, Mode.SUICIDE_SUBSTITUTED),
            (Reaction.FACE_AND_SUPPORT, Mode.SUPPORTED),
        ],
    )
    def test_mode_after_reaction(self, first_design, reaction, mode):
        assert react(initialize(first_design), reaction).mode is mode


class TestTryRestore:
    def degraded(self):
        state = initialize(single_param_population([9, 7, 4]))
        state, drop = observe(state, FitnessEvent(target="s1", changes={"f": 4.5}))
        assert drop
        return react_suicide(state)

    def test_exact_recovery(self):
        state, _ = observe(self.degraded(), FitnessEvent(target="s1", changes={"f": 9}))
        restored = try_restore(state)
        assert restored.mode is Mode.NORMAL
        assert restored.active_set == ["s1"]

    def test_still_degraded(self):
        state = self.degraded()
        assert try_restore(state) == state

    def test_within_tolerance(self):
        state, _ = observe(
            self.degraded(), FitnessEvent(target="s1", changes={"f": 9 * (1 - 1e-12)})
        )
        assert try_restore(state).mode is Mode.NORMAL

    def test_outside_tolerance(self):
        state, _ = observe(
            self.degraded(), FitnessEvent(target="s1", changes={"f": 9 * (1 - 1e-6)})
        )
        assert try_restore(state).mode is Mode.SUICIDE_SUBSTITUTED

    def test_supported_pair_is_released(self, first_design):
        state = react_support(initialize(first_design))
        restored = try_restore(state)
        assert restored.active_set == ["X3"]
        assert restored.support_fitness is None

    def test_normal_state_is_returned_unchanged(self, first_design):
        state = initialize(first_design)
        assert try_restore(state) is state

    def test_waits_while_a_new_parameter_still_hurts_the_best(self, first_design):
        state, drop = observe(
            initialize(first_design), FitnessEvent(target="X3", changes={"packet_loss": 90})
        )
        assert drop
        state = react_suicide(state)
        assert try_restore(state).mode is Mode.SUICIDE_SUBSTITUTED

        state, _ = observe(state, FitnessEvent(target="X3", changes={"packet_loss": 0}))
        restored = try_restore(state)
        assert restored.mode is Mode.NORMAL
        assert restored.current["X3"] == state.snapshot["X3"]


class TestStateInvariants:
    def test_normal_mode_requires_best_alone(self, first_design):
        state = initialize(first_design)
        with pytest.raises(pydantic.ValidationError):
            DonkeyState(**{**dict(state), "active_set": ["X1"]})

    def test_substitute_must_differ_from_best(self, first_design):
        state = initialize(first_design)
        with pytest.raises(pydantic.ValidationError):
            DonkeyState(**{**dict(state), "mode": Mode.SUICIDE_SUBSTITUTED})

    def test_snapshot_keys_match_population(self, first_design):
        state = initialize(first_design)
        with pytest.raises(pydantic.ValidationError):
            DonkeyState(**{**dict(state), "snapshot": {"X3": 1.0}})

    def test_dump_is_json(self, first_design):
        text = dump_state(react_support(initialize(first_design)))
        assert '"mode": "Supported"' in text
        assert '"original_best": "X3"' in text


def _values():
    return st.lists(st.integers(1, 9), min_size=2, max_size=6)


class TestProperties:
    @given(
        _values(),
        st.sampled_from(Objective),
        st.integers(0, 5),
        st.integers(1, 9),
        st.sampled_from(Reaction),
    )
    @settings(max_examples=200)
    def test_reaction_keeps_invariants(self, values, objective, target, value, reaction):
        population = single_param_population(values, objective)
        assume(len(set(values)) > 1)
        state = initialize(population)
        event = FitnessEvent(target=population.ids[target % len(values)], changes={"f": value})
        observed, _ = observe(state, event)
        try:
            reacted = react(observed, reaction)
        except DsoError:
            # a Run on a population whose values all collapsed to one
            assume(False)
        assert_consistent(reacted)
        assert_consistent(try_restore(reacted))
        if reaction is not Reaction.RUN:
            assert reacted.snapshot == state.snapshot
            assert reacted.population == observed.population

    @given(populations(min_solutions=2), st.data())
    @settings(max_examples=200)
    def test_run_equals_rebuilding_from_scratch(self, population, data):
        assume(rankable(population))
        target = data.draw(st.sampled_from(population.ids))
        changes = data.draw(
            st.dictionaries(st.sampled_from(population.spec_names), st.integers(1, 9))
        )
        observed, _ = observe(initialize(population), FitnessEvent(target=target, changes=changes))
        assume(rankable(observed.population))
        report = rank(observed.population)
        rebuilt = react_run(observed)
        assert rebuilt.original_best == report.best
        assert rebuilt.snapshot == report.fitness
        assert rebuilt.active_params == report.active_params
        assert rebuilt.active_set == [report.best]

    @given(
        st.lists(
            st.integers(-(10**6), 10**6), min_size=2, max_size=8, unique=True
        ),
        st.sampled_from(Objective),
    )
    def test_runner_up_is_second_ranked(self, values, objective):
        ids = [f"x{i}" for i in range(len(values))]
        snapshot = {sid: float(v) for sid, v in zip(ids, values)}
        ordered = order_ids(snapshot, ids, objective)
        assert runner_up(snapshot, ordered[0], ids) == ordered[1]

    @given(_values(), st.integers(0, 5))
    def test_suicide_then_revert_restores(self, values, bump):
        population = single_param_population(values)
        assume(len(set(values)) > 1)
        state = initialize(population)
        best = state.original_best
        original = population.solution(best).values["f"]
        state, _ = observe(state, FitnessEvent(target=best, changes={"f": original / 2}))
        state = react_suicide(state)
        state, _ = observe(state, FitnessEvent(target=best, changes={"f": original + bump}))
        restored = try_restore(state)
        assert restored.mode is Mode.NORMAL
        assert restored.active_set == [best]
