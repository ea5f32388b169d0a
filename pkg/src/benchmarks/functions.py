"""
Closed-form benchmark functions.

Each evaluator takes an array whose last axis is the point, so a whole
population can be scored in one call.
"""

from typing import Callable, Dict, Optional

import numpy as np

from ..errors import DimensionMismatch, ValidationError
from ..models.benchmark import BenchmarkFunction, Family, FunctionId

# Listed in the comparison tables without a closed form
OUT_OF_SCOPE = frozenset({"F9", "F10", "F12", "F14", "F15"})

DEFAULT_DIMENSION = 30


def sphere(x: np.ndarray) -> np.ndarray:
    return np.sum(x**2, axis=-1)


def schwefel_2_22(x: np.ndarray) -> np.ndarray:
    a = np.abs(x)
    return np.sum(a, axis=-1) + np.prod(a, axis=-1)


def schwefel_1_2(x: np.ndarray) -> np.ndarray:
    return np.sum(np.cumsum(x, axis=-1) ** 2, axis=-1)


def rosenbrock(x: np.ndarray) -> np.ndarray:
    head, tail = x[..., :-1], x[..., 1:]
    return np.sum(100.0 * (tail - head**2) ** 2 + (head - 1.0) ** 2, axis=-1)


def schwefel_2_26(x: np.ndarray) -> np.ndarray:
    return -np.sum(x * np.sin(np.sqrt(np.abs(x))), axis=-1)


def rastrigin(x: np.ndarray) -> np.ndarray:
    return np.sum(x**2 - 10.0 * np.cos(2.0 * np.pi * x) + 10.0, axis=-1)


def ackley(x: np.ndarray) -> np.ndarray:
    return (
        -20.0 * np.exp(-0.2 * np.sqrt(np.mean(x**2, axis=-1)))
        - np.exp(np.mean(np.cos(2.0 * np.pi * x), axis=-1))
        + 20.0
        + np.e
    )


def griewank(x: np.ndarray) -> np.ndarray:
    i = np.arange(1, x.shape[-1] + 1)
    return np.sum(x**2, axis=-1) / 4000.0 - np.prod(np.cos(x / np.sqrt(i)), axis=-1) + 1.0


def six_hump_camel(x: np.ndarray) -> np.ndarray:
    x1, x2 = x[..., 0], x[..., 1]
    return (
        4.0 * x1**2
        - 2.1 * x1**4
        + x1**6 / 3.0
        + x1 * x2
        - 4.0 * x2**2
        + 4.0 * x2**4
    )


def goldstein_price(x: np.ndarray) -> np.ndarray:
    x1, x2 = x[..., 0], x[..., 1]
    a = 1.0 + (x1 + x2 + 1.0) ** 2 * (
        19.0 - 14.0 * x1 + 3.0 * x1**2 - 14.0 * x2 + 6.0 * x1 * x2 + 3.0 * x2**2
    )
    b = 30.0 + (2.0 * x1 - 3.0 * x2) ** 2 * (
        18.0 - 32.0 * x1 + 12.0 * x1**2 + 48.0 * x2 - 36.0 * x1 * x2 + 27.0 * x2**2
    )
    return a * b


EVALUATORS: Dict[FunctionId, Callable[[np.ndarray], np.ndarray]] = {
    FunctionId.F1: sphere,
    FunctionId.F2: schwefel_2_22,
    FunctionId.F3: schwefel_1_2,
    FunctionId.F4: rosenbrock,
    FunctionId.F5: schwefel_2_26,
    FunctionId.F6: rastrigin,
    FunctionId.F7: ackley,
    FunctionId.F8: griewank,
    FunctionId.F11: six_hump_camel,
    FunctionId.F13: goldstein_price,
}

# id -> (name, family, bounds, optimum, solution per axis or fixed points)
_TABLE = {
    FunctionId.F1: ("Sphere", Family.UNIMODAL, (-100.0, 100.0), 0.0, 0.0),
    FunctionId.F2: ("Schwefel 2.22", Family.UNIMODAL, (-10.0, 10.0), 0.0, 0.0),
    FunctionId.F3: ("Schwefel 1.2", Family.UNIMODAL, (-100.0, 100.0), 0.0, 0.0),
    FunctionId.F4: ("Generalized Rosenbrock", Family.UNIMODAL, (-30.0, 30.0), 0.0, 1.0),
    FunctionId.F5: (
        "Generalized Schwefel 2.26",
        Family.MULTIMODAL,
        (-500.0, 500.0),
        -12569.487,
        420.9687,
    ),
    FunctionId.F6: ("Generalized Rastrigin", Family.MULTIMODAL, (-5.12, 5.12), 0.0, 0.0),
    FunctionId.F7: ("Ackley", Family.MULTIMODAL, (-32.0, 32.0), 0.0, 0.0),
    FunctionId.F8: ("Generalized Griewank", Family.MULTIMODAL, (-600.0, 600.0), 0.0, 0.0),
    FunctionId.F11: (
        "Six-hump Camel Back",
        Family.FIXED_DIMENSION,
        (-5.0, 5.0),
        -1.0316285,
        [[0.08983, -0.7126], [-0.08983, 0.7126]],
    ),
    FunctionId.F13: (
        "Goldstein-Price",
        Family.FIXED_DIMENSION,
        (-2.0, 2.0),
        3.0,
        [[0.0, -1.0]],
    ),
}


def resolve(function_id: str) -> FunctionId:
    """Map a user-supplied id such as 'f5' to a FunctionId"""
    key = function_id.strip().upper()
    if key in OUT_OF_SCOPE:
        raise ValidationError(
            f"{key} is out of scope: it has no closed-form definition to evaluate"
        )
    try:
        return FunctionId(key)
    except ValueError:
        known = ", ".join(member.value for member in FunctionId)
        raise ValidationError(f"unknown function '{function_id}' (known: {known})") from None


def get_function(
    function_id: FunctionId | str, dimension: Optional[int] = None
) -> BenchmarkFunction:
    """
    Benchmark definition with its search box and optimum.

    `dimension` overrides the default of 30 for F1-F8; F11 and F13 are fixed
    at 2.
    """
    fid = resolve(function_id) if isinstance(function_id, str) else function_id
    name, family, bounds, optimum, solution = _TABLE[fid]
    if family is Family.FIXED_DIMENSION:
        if dimension not in (None, 2):
            raise DimensionMismatch(2, dimension)
        return BenchmarkFunction(
            id=fid,
            name=name,
            family=family,
            dimension=2,
            bounds=bounds,
            known_optimum=optimum,
            known_solutions=solution,
        )

    dim = DEFAULT_DIMENSION if dimension is None else dimension
    if dim < 1:
        raise ValidationError(f"dimension must be positive, got {dim}")
    # F5's optimum grows with the dimension
    if fid is FunctionId.F5:
        optimum = optimum * dim / DEFAULT_DIMENSION
    return BenchmarkFunction(
        id=fid,
        name=name,
        family=family,
        dimension=dim,
        bounds=bounds,
        known_optimum=optimum,
        known_solutions=[[solution] * dim],
    )


def evaluate_many(f: BenchmarkFunction, points: np.ndarray) -> np.ndarray:
    """Values for a (k, dimension) array of points"""
    return EVALUATORS[f.id](points)


def evaluate(f: BenchmarkFunction, x) -> float:
    """
    Value of the benchmark at one point.

    Points outside the search box are evaluated, not rejected.
    """
    point = np.asarray(x, dtype=float)
    if point.ndim != 1 or point.shape[0] != f.dimension:
        raise DimensionMismatch(f.dimension, int(point.size))
    if not np.all(np.isfinite(point)):
        raise ValidationError("point has non-finite components")
    return float(EVALUATORS[f.id](point))
