"""Adaptive donkey controller"""

from .controller import (
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

__all__ = [
    "dump_state",
    "initialize",
    "observe",
    "react",
    "react_run",
    "react_suicide",
    "react_support",
    "runner_up",
    "try_restore",
]
