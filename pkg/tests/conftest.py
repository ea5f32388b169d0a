"""Shared fixtures: the five-city distance matrix and routing path tables"""

import pytest
from hypothesis import strategies as st

from src.config import Config
from src.errors import AllParametersConstant
from src.fitness.engine import filter_constant_parameters
from src.models.population import Direction, Objective, ParameterSpec, Population, Solution
from src.models.tsp import DistanceMatrix

FIVE_CITY_MATRIX = (
    (0, 10, 12, 11, 14),
    (10, 0, 13, 15, 8),
    (12, 13, 0, 9, 14),
    (11, 15, 9, 0, 16),
    (15, 8, 14, 16, 0),
)

FIVE_CITY_CSV = "\n".join(",".join(str(v) for v in row) for row in FIVE_CITY_MATRIX) + "\n"

ROUTING_SPECS = [
    ParameterSpec(name="packet_loss", direction=Direction.INVERSE),
    ParameterSpec(name="packet_delay", direction=Direction.INVERSE),
    ParameterSpec(name="cost", direction=Direction.INVERSE),
    ParameterSpec(name="bandwidth", direction=Direction.DIRECT),
    ParameterSpec(name="transmission_speed", direction=Direction.DIRECT),
]

FIRST_DESIGN_CSV = (
    "id," + ",".join(f"{spec.name}:{spec.direction.value}" for spec in ROUTING_SPECS) + "\n"
) + """X1,0,70,5186,1544,15
X2,0,55,26062,1544,12
X3,0,19,4062,1544,16
"""


def make_population(specs, rows, objective=Objective.MAXIMIZE) -> Population:
    """rows: {id: [values in spec order]}"""
    return Population(
        specs=specs,
        solutions=[
            Solution(id=sid, values={spec.name: float(v) for spec, v in zip(specs, values)})
            for sid, values in rows.items()
        ],
        objective=objective,
    )


def single_param_population(values, objective=Objective.MAXIMIZE) -> Population:
    """One Direct parameter `f`, so fitness is 2 * value"""
    return make_population(
        [ParameterSpec(name="f", direction=Direction.DIRECT)],
        {f"s{i}": [v] for i, v in enumerate(values, start=1)},
        objective,
    )


@st.composite
def populations(draw, min_solutions=1, max_solutions=5, max_params=5):
    """Direct/Inverse parameters p0.. with small positive integer values"""
    n_params = draw(st.integers(1, max_params))
    directions = draw(st.lists(st.sampled_from(Direction), min_size=n_params, max_size=n_params))
    specs = [ParameterSpec(name=f"p{j}", direction=d) for j, d in enumerate(directions)]
    n_solutions = draw(st.integers(min_solutions, max_solutions))
    rows = {
        f"x{i}": draw(st.lists(st.integers(1, 9), min_size=n_params, max_size=n_params))
        for i in range(n_solutions)
    }
    objective = draw(st.sampled_from(Objective))
    return make_population(specs, rows, objective)


def rankable(population: Population) -> bool:
    try:
        filter_constant_parameters(population)
    except AllParametersConstant:
        return False
    return True


@pytest.fixture(autouse=True)
def no_tracing(monkeypatch):
    monkeypatch.setattr(Config, "TRACING", "off")


@pytest.fixture
def five_city() -> DistanceMatrix:
    return DistanceMatrix(d=FIVE_CITY_MATRIX)


@pytest.fixture
def first_design() -> Population:
    return make_population(
        ROUTING_SPECS,
        {
            "X1": [0, 70, 5186, 1544, 15],
            "X2": [0, 55, 26062, 1544, 12],
            "X3": [0, 19, 4062, 1544, 16],
        },
    )


@pytest.fixture
def second_design() -> Population:
    return make_population(
        ROUTING_SPECS,
        {
            "X1": [0, 13, 150, 64, 4],
            "X2": [0, 29, 300, 64, 7],
            "X3": [0, 25, 700, 64, 16],
        },
    )


@pytest.fixture
def ambulance_roads() -> Population:
    """Ambulance roads; every column is an ordinal rating, 1 = best"""
    specs = [
        ParameterSpec(name=name, direction=Direction.INVERSE)
        for name in ("road_condition", "distance", "cost", "speed_limit", "speed")
    ]
    return make_population(
        specs,
        {
            "X1": [1, 1, 2, 0, 1],
            "X2": [2, 3, 3, 0, 4],
            "X3": [2, 4, 4, 0, 3],
        },
    )
