"""Data models for the traveling-salesman application"""

import math
from typing import List, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator


class DistanceMatrix(BaseModel):
    """
    Directed distances between cities.

    Cities are numbered from 1 in the public API, following the row order of
    the input matrix. Asymmetric matrices are allowed.
    """

    model_config = ConfigDict(frozen=True)

    d: Tuple[Tuple[float, ...], ...] = Field(..., description="n x n distances, row = from")

    @model_validator(mode="after")
    def _valid(self) -> "DistanceMatrix":
        n = len(self.d)
        if n < 2:
            raise ValueError("a distance matrix needs at least 2 cities")
        for i, row in enumerate(self.d):
            if len(row) != n:
                raise ValueError(f"row {i + 1} has {len(row)} entries, expected {n}")
            for j, value in enumerate(row):
                if i == j:
                    if value != 0:
                        raise ValueError(f"d[{i + 1}][{j + 1}] must be 0 on the diagonal")
                elif not (math.isfinite(value) and value > 0):
                    raise ValueError(f"d[{i + 1}][{j + 1}] must be positive and finite")
        return self

    @property
    def n(self) -> int:
        return len(self.d)

    @property
    def cities(self) -> range:
        return range(1, self.n + 1)

    def distance(self, a: int, b: int) -> float:
        return self.d[a - 1][b - 1]

    def as_array(self) -> np.ndarray:
        return np.array(self.d, dtype=float)


class Tour(BaseModel):
    """A closed tour starting and ending at `start`"""

    model_config = ConfigDict(frozen=True)

    start: int = Field(..., ge=1)
    sequence: List[int] = Field(..., min_length=3)
    weight: float

    @model_validator(mode="after")
    def _closed(self) -> "Tour":
        if self.sequence[0] != self.start or self.sequence[-1] != self.start:
            raise ValueError("tour must begin and end at its start city")
        inner = self.sequence[:-1]
        if len(set(inner)) != len(inner):
            raise ValueError("tour visits a city more than once")
        return self

    def edges(self) -> List[Tuple[int, int]]:
        return list(zip(self.sequence, self.sequence[1:]))

    def label(self) -> str:
        return " ".join(str(city) for city in self.sequence)


class AcoConfig(BaseModel):
    """Ant colony baseline settings"""

    model_config = ConfigDict(frozen=True)

    n_ants: int = Field(3, gt=0)
    iterations: int = Field(100, gt=0)
    rho: float = Field(0.5, gt=0.0, lt=1.0, description="Pheromone evaporation rate")
    seed: int = Field(0, ge=0)


class AcoRun(BaseModel):
    """Best tour found plus the best-so-far weight after every iteration"""

    model_config = ConfigDict(frozen=True)

    best: Tour
    history: List[float]
