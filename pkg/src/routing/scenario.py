"""
Scenario documents.

A scenario is a sectioned text file:

    [title]
    Packet routing, first network design
    [specs]
    packet_loss = Inverse
    transmission_speed          # direction from DEFAULT_DIRECTIONS
    [paths]
    X1, 0, 70, ...
    [policy]
    FaceAndSuicide
    [objective]
    Maximize
    [events]
    1, ParamChange, X3, packet_delay=500
    2, Overload, X3
    3, Recovery, X3, packet_delay

`#` starts a comment. Path values follow the [specs] order.
"""

import logging
from importlib import resources
try:
    from importlib.resources.abc import Traversable
except ImportError:  # Python < 3.11
    from importlib.abc import Traversable
from pathlib import Path
from typing import Dict, List, Optional, Tuple, Union

import pydantic

from ..errors import ParseError, ValidationError
from ..fitness.io import parse_float
from ..models.donkey import Reaction
from ..models.population import Direction, Objective, ParameterSpec, Solution
from ..models.scenario import EventKind, Scenario, TimedEvent

logger = logging.getLogger(__name__)

SECTIONS = ("title", "specs", "paths", "policy", "objective", "events")

DEFAULT_DIRECTIONS: Dict[str, Direction] = {
    "packet_loss": Direction.INVERSE,
    "packet_delay": Direction.INVERSE,
    "cost": Direction.INVERSE,
    "distance": Direction.INVERSE,
    "bandwidth": Direction.DIRECT,
    "transmission_speed": Direction.DIRECT,
    "road_condition": Direction.DIRECT,
    "speed": Direction.DIRECT,
    "speed_limit": Direction.DIRECT,
}

BUNDLED = ("packet_routing_1", "packet_routing_2", "ambulance")


def _normalize(name: str) -> str:
    return "_".join(name.strip().lower().split())


def _enum(enum_cls, raw: str, line: int, field: str):
    text = raw.strip().replace("&", "And").replace(" ", "")
    for member in enum_cls:
        if member.value.lower() == text.lower():
            return member
    choices = "|".join(member.value for member in enum_cls)
    raise ParseError(f"expected {choices}, got '{raw.strip()}'", line=line, field=field)


def _split_sections(text: str) -> Dict[str, List[Tuple[int, str]]]:
    sections: Dict[str, List[Tuple[int, str]]] = {}
    current: Optional[str] = None
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("[") and line.endswith("]"):
            current = line[1:-1].strip().lower()
            if current not in SECTIONS:
                raise ParseError(f"unknown section [{current}]", line=number)
            if current in sections:
                raise ParseError(f"duplicate section [{current}]", line=number)
            sections[current] = []
            continue
        if current is None:
            raise ParseError("content before the first [section]", line=number)
        sections[current].append((number, line))
    return sections


def _parse_specs(lines: List[Tuple[int, str]]) -> List[ParameterSpec]:
    specs = []
    for number, line in lines:
        name, sep, direction = line.partition("=")
        key = _normalize(name)
        if not key:
            raise ParseError("missing parameter name", line=number)
        if sep:
            parsed = _enum(Direction, direction, number, key)
        elif key in DEFAULT_DIRECTIONS:
            parsed = DEFAULT_DIRECTIONS[key]
        else:
            raise ParseError(
                "no default direction for this parameter; write name = Direct|Inverse",
                line=number,
                field=key,
            )
        specs.append(ParameterSpec(name=key, direction=parsed))
    return specs


def _parse_paths(lines: List[Tuple[int, str]], specs: List[ParameterSpec]) -> List[Solution]:
    paths = []
    for number, line in lines:
        cells = [cell.strip() for cell in line.split(",")]
        if len(cells) != len(specs) + 1:
            raise ParseError(
                f"expected an id and {len(specs)} values, got {len(cells) - 1} values",
                line=number,
                field=cells[0],
            )
        values = {
            spec.name: parse_float(cell, number, spec.name)
            for spec, cell in zip(specs, cells[1:])
        }
        paths.append(Solution(id=cells[0], values=values))
    return paths


def _single(lines: List[Tuple[int, str]], section: str) -> Tuple[int, str]:
    if len(lines) != 1:
        line = lines[1][0] if len(lines) > 1 else None
        raise ParseError(f"[{section}] takes exactly one value", line=line, field=section)
    return lines[0]


def _parse_event(number: int, line: str) -> TimedEvent:
    cells = [cell.strip() for cell in line.split(",")]
    if len(cells) < 3:
        raise ParseError("an event needs at least: tick, kind, target", line=number)
    try:
        tick = int(cells[0])
    except ValueError:
        raise ParseError(f"'{cells[0]}' is not an integer tick", line=number, field="t") from None
    kind = _enum(EventKind, cells[1], number, "kind")

    changes: Dict[str, float] = {}
    restore: List[str] = []
    reaction: Optional[Reaction] = None
    for cell in cells[3:]:
        name, sep, value = cell.partition("=")
        key = _normalize(name)
        if key == "reaction" and sep:
            reaction = _enum(Reaction, value, number, "reaction")
        elif sep:
            changes[key] = parse_float(value, number, key)
        elif kind is EventKind.RECOVERY and key:
            restore.append(key)
        else:
            raise ParseError(f"expected param=value, got '{cell}'", line=number, field=key)

    try:
        return TimedEvent(
            t=tick,
            kind=kind,
            target=cells[2],
            changes=changes,
            restore=restore,
            reaction=reaction,
            line=number,
        )
    except pydantic.ValidationError as e:
        raise ValidationError(f"line {number}: {_message(e)}") from None


def _message(error: pydantic.ValidationError) -> str:
    details = error.errors()
    if not details:
        return str(error)
    return str(details[0].get("msg", error)).removeprefix("Value error, ")


def parse_scenario(text: str) -> Scenario:
    """
    Parse and validate a scenario document.

    Raises:
        ParseError: malformed document, with line and field
        ValidationError: well-formed document violating a scenario invariant
    """
    sections = _split_sections(text)
    for required in ("specs", "paths"):
        if not sections.get(required):
            raise ParseError(f"missing or empty [{required}] section", field=required)

    specs = _parse_specs(sections["specs"])
    try:
        paths = _parse_paths(sections["paths"], specs)
    except pydantic.ValidationError as e:
        raise ValidationError(_message(e)) from None

    policy = Reaction.RUN
    if sections.get("policy"):
        number, value = _single(sections["policy"], "policy")
        policy = _enum(Reaction, value, number, "policy")
    objective = Objective.MAXIMIZE
    if sections.get("objective"):
        number, value = _single(sections["objective"], "objective")
        objective = _enum(Objective, value, number, "objective")
    title = " ".join(line for _, line in sections.get("title", []))
    events = [_parse_event(number, line) for number, line in sections.get("events", [])]

    try:
        scenario = Scenario(
            title=title,
            specs=specs,
            paths=paths,
            objective=objective,
            policy=policy,
            events=events,
        )
    except pydantic.ValidationError as e:
        raise ValidationError(_message(e)) from None

    logger.debug(
        "Loaded scenario '%s': %d paths, %d specs, %d events",
        scenario.title,
        len(scenario.paths),
        len(scenario.specs),
        len(scenario.events),
    )
    return scenario


def load_scenario(source: Union[Path, str, Traversable]) -> Scenario:
    """Read and parse a scenario file"""
    path = Path(source) if isinstance(source, str) else source
    return parse_scenario(path.read_text(encoding="utf-8"))


def bundled_scenario(name: str) -> Traversable:
    """Path of a scenario shipped with the package"""
    if name not in BUNDLED:
        raise ValidationError(f"unknown bundled scenario '{name}' (known: {', '.join(BUNDLED)})")
    return resources.files(__package__).joinpath("scenarios").joinpath(f"{name}.dso")
