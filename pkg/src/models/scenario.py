"""Data models for routing scenarios and their simulation logs"""

import math
from enum import Enum
from typing import Dict, List, Optional

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from .donkey import Mode, Reaction
from .population import Objective, ParameterSpec, Population, Solution


class EventKind(str, Enum):
    PARAM_CHANGE = "ParamChange"
    OVERLOAD = "Overload"
    RECOVERY = "Recovery"


class TimedEvent(BaseModel):
    """
    A scenario event at an integer tick.

    ParamChange writes `changes` into the target; Overload flags congestion on
    the target; Recovery writes `changes` and resets every name in `restore`
    to its value at the last full evaluation.
    """

    model_config = ConfigDict(frozen=True)

    t: int = Field(..., ge=0, description="Tick")
    kind: EventKind
    target: str = Field(..., min_length=1)
    changes: Dict[str, float] = Field(default_factory=dict)
    restore: List[str] = Field(default_factory=list)
    reaction: Optional[Reaction] = Field(None, description="Overrides the scenario policy")
    line: Optional[int] = Field(None, description="Source line, for diagnostics")

    @field_validator("changes")
    @classmethod
    def _finite(cls, changes: Dict[str, float]) -> Dict[str, float]:
        for name, value in changes.items():
            if not math.isfinite(value):
                raise ValueError(f"new value for '{name}' is not finite")
        return changes

    @model_validator(mode="after")
    def _kind_fields(self) -> "TimedEvent":
        if self.kind is not EventKind.RECOVERY and self.restore:
            raise ValueError(f"{self.kind.value} events cannot list parameters to restore")
        if self.kind is EventKind.OVERLOAD and self.changes:
            raise ValueError("Overload events carry no parameter changes")
        if self.kind is not EventKind.PARAM_CHANGE and self.reaction is not None:
            raise ValueError("only ParamChange events can override the reaction")
        return self

    def summary(self) -> str:
        parts = [f"{self.kind.value} {self.target}"]
        parts.extend(f"{name}={value:g}" for name, value in self.changes.items())
        parts.extend(self.restore)
        if self.reaction is not None:
            parts.append(f"reaction={self.reaction.value}")
        return " ".join(parts)


class Scenario(BaseModel):
    """Path table, objective, reaction policy and timed events"""

    model_config = ConfigDict(frozen=True)

    title: str = ""
    specs: List[ParameterSpec] = Field(..., min_length=1)
    paths: List[Solution] = Field(..., min_length=1)
    objective: Objective = Objective.MAXIMIZE
    policy: Reaction = Reaction.RUN
    events: List[TimedEvent] = Field(default_factory=list)

    @model_validator(mode="after")
    def _valid(self) -> "Scenario":
        population = self.population
        ticks = [event.t for event in self.events]
        if ticks != sorted(ticks):
            raise ValueError("events must be sorted by non-decreasing tick")
        for event in self.events:
            where = f"event at tick {event.t}" + (
                f" (line {event.line})" if event.line is not None else ""
            )
            if event.target not in population.ids:
                raise ValueError(f"{where} references unknown path '{event.target}'")
            for name in [*event.changes, *event.restore]:
                if name not in population.spec_names:
                    raise ValueError(f"{where} references unknown parameter '{name}'")
        return self

    @property
    def population(self) -> Population:
        return Population(specs=self.specs, solutions=self.paths, objective=self.objective)


class LogRecord(BaseModel):
    """One step of a simulation: the initial smuggler pass or one event"""

    model_config = ConfigDict(frozen=True)

    tick: int
    event: str
    fitness: Dict[str, float]
    drop_detected: bool = False
    reaction: Optional[str] = None
    best: str
    active_set: List[str]
    mode: Mode
    support_fitness: Optional[float] = None


class SimulationLog(BaseModel):
    model_config = ConfigDict(frozen=True)

    title: str = ""
    records: List[LogRecord] = Field(default_factory=list)
