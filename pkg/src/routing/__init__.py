"""Packet and ambulance routing scenarios driven through the donkey controller"""

from .report import report
from .scenario import bundled_scenario, load_scenario, parse_scenario
from .simulator import run

__all__ = ["bundled_scenario", "load_scenario", "parse_scenario", "report", "run"]
