"""Data models for the adaptive (donkey) mode"""

import math
from enum import Enum
from typing import Dict, List, Optional

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from .population import Population


class Reaction(str, Enum):
    """Reaction applied when the best solution's fitness drops"""

    RUN = "Run"
    FACE_AND_SUICIDE = "FaceAndSuicide"
    FACE_AND_SUPPORT = "FaceAndSupport"


class Mode(str, Enum):
    NORMAL = "Normal"
    SUICIDE_SUBSTITUTED = "SuicideSubstituted"
    SUPPORTED = "Supported"


class FitnessEvent(BaseModel):
    """A congestion-sensing update: new values for some parameters of one solution"""

    model_config = ConfigDict(frozen=True)

    target: str = Field(..., min_length=1, description="Solution id the update applies to")
    changes: Dict[str, float] = Field(default_factory=dict, description="Parameter -> new value")

    @field_validator("changes")
    @classmethod
    def _finite(cls, changes: Dict[str, float]) -> Dict[str, float]:
        for name, value in changes.items():
            if not math.isfinite(value):
                raise ValueError(f"new value for '{name}' is not finite")
        return changes


class DonkeyState(BaseModel):
    """
    Adaptive-mode state.

    `snapshot` is the fitness of every solution at the last full evaluation and
    is only replaced by a Run. `current` holds the most recent recomputation.
    """

    model_config = ConfigDict(frozen=True)

    population: Population
    snapshot: Dict[str, float] = Field(..., description="Frozen fitness per solution id")
    active_params: List[str] = Field(..., description="Parameters used at the last ranking")
    original_best: str
    active_set: List[str] = Field(..., min_length=1)
    mode: Mode = Mode.NORMAL
    policy: Reaction = Reaction.RUN
    current: Dict[str, float] = Field(default_factory=dict)
    support_fitness: Optional[float] = Field(
        None, description="Combined fitness of the supported pair"
    )

    @model_validator(mode="after")
    def _mode_consistent(self) -> "DonkeyState":
        if set(self.snapshot) != set(self.population.ids):
            raise ValueError("snapshot keys must match the population ids")
        if self.original_best not in self.snapshot:
            raise ValueError(f"original best '{self.original_best}' is not in the population")
        unknown = [sid for sid in self.active_set if sid not in self.snapshot]
        if unknown:
            raise ValueError(f"active set references unknown solutions {unknown}")

        if self.mode is Mode.NORMAL:
            if self.active_set != [self.original_best]:
                raise ValueError("Normal mode requires active_set == [original_best]")
        elif self.mode is Mode.SUICIDE_SUBSTITUTED:
            if len(self.active_set) != 1 or self.active_set[0] == self.original_best:
                raise ValueError("SuicideSubstituted mode requires one replacement solution")
        elif self.mode is Mode.SUPPORTED:
            if (
                len(self.active_set) != 2
                or self.active_set[0] != self.original_best
                or self.active_set[1] == self.original_best
            ):
                raise ValueError("Supported mode requires active_set == [original_best, support]")
        if self.support_fitness is not None and self.mode is not Mode.SUPPORTED:
            raise ValueError("support fitness is only defined in Supported mode")
        return self
