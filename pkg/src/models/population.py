"""Data models for the smuggler's solution population"""

import math
from enum import Enum
from typing import Dict, List

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator


class Direction(str, Enum):
    """Which side of the fitness ratio a parameter sits on"""

    DIRECT = "Direct"
    INVERSE = "Inverse"


class Objective(str, Enum):
    MAXIMIZE = "Maximize"
    MINIMIZE = "Minimize"


class ParameterSpec(BaseModel):
    """A named solution attribute and its proportionality direction"""

    model_config = ConfigDict(frozen=True)

    name: str = Field(..., min_length=1, description="Parameter identifier")
    direction: Direction = Field(..., description="Direct (numerator) or Inverse (denominator)")


class Solution(BaseModel):
    """A candidate solution: one real value per parameter"""

    model_config = ConfigDict(frozen=True)

    id: str = Field(..., min_length=1, description="Solution identifier (e.g. X1)")
    values: Dict[str, float] = Field(..., description="Parameter name -> value")

    @field_validator("values")
    @classmethod
    def _finite(cls, values: Dict[str, float]) -> Dict[str, float]:
        for name, value in values.items():
            if not math.isfinite(value):
                raise ValueError(f"parameter '{name}' has non-finite value {value}")
        return values

    def with_values(self, changes: Dict[str, float]) -> "Solution":
        """Copy of this solution with some parameter values replaced"""
        return Solution(id=self.id, values={**self.values, **changes})


class Population(BaseModel):
    """The smuggler's solution set"""

    model_config = ConfigDict(frozen=True)

    specs: List[ParameterSpec] = Field(..., min_length=1)
    solutions: List[Solution] = Field(..., min_length=1)
    objective: Objective = Field(Objective.MAXIMIZE)

    @model_validator(mode="after")
    def _conforms(self) -> "Population":
        names = [spec.name for spec in self.specs]
        if len(set(names)) != len(names):
            raise ValueError("parameter names must be unique")
        ids = [solution.id for solution in self.solutions]
        if len(set(ids)) != len(ids):
            raise ValueError("solution ids must be unique")
        expected = set(names)
        for solution in self.solutions:
            got = set(solution.values)
            if got != expected:
                missing = sorted(expected - got)
                extra = sorted(got - expected)
                raise ValueError(
                    f"solution '{solution.id}' does not conform to specs "
                    f"(missing={missing}, extra={extra})"
                )
        return self

    @property
    def ids(self) -> List[str]:
        return [solution.id for solution in self.solutions]

    @property
    def spec_names(self) -> List[str]:
        return [spec.name for spec in self.specs]

    def solution(self, solution_id: str) -> Solution:
        for solution in self.solutions:
            if solution.id == solution_id:
                return solution
        raise KeyError(solution_id)

    def spec(self, name: str) -> ParameterSpec:
        for spec in self.specs:
            if spec.name == name:
                return spec
        raise KeyError(name)

    def with_solutions(self, solutions: List[Solution]) -> "Population":
        return Population(specs=self.specs, solutions=solutions, objective=self.objective)


class FitnessReport(BaseModel):
    """Result of one smuggler pass: filtered parameters, fitness and ranking"""

    model_config = ConfigDict(frozen=True)

    active_params: List[str] = Field(..., description="Parameters kept after filtering")
    fitness: Dict[str, float] = Field(..., description="Solution id -> fitness")
    ranking: List[str] = Field(..., description="Solution ids, best first")
    best: str = Field(..., description="Best solution id")
    objective: Objective = Field(Objective.MAXIMIZE)

    @model_validator(mode="after")
    def _consistent(self) -> "FitnessReport":
        if sorted(self.ranking) != sorted(self.fitness):
            raise ValueError("ranking must be a permutation of the solution ids")
        if not self.ranking or self.best != self.ranking[0]:
            raise ValueError("best must be the first ranked solution")
        for solution_id, value in self.fitness.items():
            if not math.isfinite(value):
                raise ValueError(f"fitness of '{solution_id}' is not finite")
        return self
