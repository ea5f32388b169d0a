"""Benchmark functions and the random-population smuggler harness"""

from .functions import OUT_OF_SCOPE, evaluate, get_function, resolve
from .harness import random_search_smuggler, run_statistics

__all__ = [
    "OUT_OF_SCOPE",
    "evaluate",
    "get_function",
    "random_search_smuggler",
    "resolve",
    "run_statistics",
]
