"""Smuggler fitness engine"""

from .engine import compute_fitness, filter_constant_parameters, rank

__all__ = ["compute_fitness", "filter_constant_parameters", "rank"]
