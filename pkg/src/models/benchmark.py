"""Data models for the benchmark harness"""

from enum import Enum
from typing import List, Tuple

from pydantic import BaseModel, ConfigDict, Field, model_validator


class FunctionId(str, Enum):
    F1 = "F1"
    F2 = "F2"
    F3 = "F3"
    F4 = "F4"
    F5 = "F5"
    F6 = "F6"
    F7 = "F7"
    F8 = "F8"
    F11 = "F11"
    F13 = "F13"


class Family(str, Enum):
    UNIMODAL = "unimodal"
    MULTIMODAL = "multimodal"
    FIXED_DIMENSION = "fixed-dimension multimodal"


class BenchmarkFunction(BaseModel):
    """A closed-form minimization benchmark with its search box and optimum"""

    model_config = ConfigDict(frozen=True)

    id: FunctionId
    name: str
    family: Family
    dimension: int = Field(..., gt=0)
    bounds: Tuple[float, float] = Field(..., description="Same interval on every axis")
    known_optimum: float
    known_solutions: List[List[float]] = Field(default_factory=list)

    @model_validator(mode="after")
    def _shape(self) -> "BenchmarkFunction":
        low, high = self.bounds
        if not low < high:
            raise ValueError("lower bound must be below the upper bound")
        for point in self.known_solutions:
            if len(point) != self.dimension:
                raise ValueError("known solution does not match the dimension")
        return self


class SearchResult(BaseModel):
    """Outcome of one random-population smuggler run"""

    model_config = ConfigDict(frozen=True)

    best_point: List[float]
    best_value: float
    trace: List[float] = Field(..., description="Best-so-far value after each sample")


class RunStatistics(BaseModel):
    """Average and standard deviation of the best values over independent runs"""

    model_config = ConfigDict(frozen=True)

    function: FunctionId
    runs: int = Field(..., ge=1)
    population_size: int = Field(..., ge=1)
    avg: float
    stddev: float = Field(..., ge=0.0)
    best_overall: float

    @model_validator(mode="after")
    def _single_run(self) -> "RunStatistics":
        if self.runs == 1 and self.stddev != 0.0:
            raise ValueError("a single run has zero standard deviation")
        return self
