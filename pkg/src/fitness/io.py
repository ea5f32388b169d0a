"""Population table ingestion and fitness report export"""

import csv
import io
from pathlib import Path
from typing import List, Optional

import pydantic

from ..errors import ParseError, ValidationError
from ..models.population import (
    Direction,
    FitnessReport,
    Objective,
    ParameterSpec,
    Population,
    Solution,
)


def _parse_enum(enum_cls, raw: str, line: int, field: str):
    text = raw.strip()
    for member in enum_cls:
        if member.value.lower() == text.lower():
            return member
    choices = "|".join(member.value for member in enum_cls)
    raise ParseError(f"expected {choices}, got '{text}'", line=line, field=field)


def parse_float(raw: str, line: int, field: str) -> float:
    try:
        return float(raw.strip())
    except ValueError:
        raise ParseError(f"'{raw.strip()}' is not a number", line=line, field=field) from None


def parse_population(text: str, objective: Optional[Objective] = None) -> Population:
    """
    Parse a population table.

    The first non-comment row is the header `id,<name>:<Direct|Inverse>,...`;
    every following row is `<solution id>,<value>,...` in header order. A
    comment line `# objective: Maximize|Minimize` sets the objective, which
    the `objective` argument overrides.
    """
    file_objective = Objective.MAXIMIZE
    specs: Optional[List[ParameterSpec]] = None
    solutions: List[Solution] = []

    reader = csv.reader(io.StringIO(text))
    for row in reader:
        line = reader.line_num
        if not row or all(not cell.strip() for cell in row):
            continue
        first = row[0].strip()
        if first.startswith("#"):
            comment = ",".join(row).lstrip("#").strip()
            key, _, value = comment.partition(":")
            if key.strip().lower() == "objective":
                file_objective = _parse_enum(Objective, value, line, "objective")
            continue

        if specs is None:
            specs = []
            for column in row[1:]:
                name, sep, direction = column.partition(":")
                if not sep or not name.strip():
                    raise ParseError(
                        f"header column '{column.strip()}' must be name:direction",
                        line=line,
                        field=column.strip(),
                    )
                specs.append(
                    ParameterSpec(
                        name=name.strip(),
                        direction=_parse_enum(Direction, direction, line, name.strip()),
                    )
                )
            if not specs:
                raise ParseError("header declares no parameters", line=line)
            continue

        if len(row) != len(specs) + 1:
            raise ParseError(
                f"expected {len(specs) + 1} columns, got {len(row)}", line=line, field=first
            )
        values = {
            spec.name: parse_float(cell, line, spec.name) for spec, cell in zip(specs, row[1:])
        }
        try:
            solutions.append(Solution(id=first, values=values))
        except pydantic.ValidationError as e:
            raise ParseError(_first_message(e), line=line, field=first) from None

    if specs is None:
        raise ParseError("population table has no header row")

    try:
        return Population(
            specs=specs, solutions=solutions, objective=objective or file_objective
        )
    except pydantic.ValidationError as e:
        raise ValidationError(_first_message(e)) from None


def load_population(path: Path, objective: Optional[Objective] = None) -> Population:
    """Read a population table from disk"""
    return parse_population(Path(path).read_text(encoding="utf-8"), objective=objective)


def _first_message(error: pydantic.ValidationError) -> str:
    details = error.errors()
    if not details:
        return str(error)
    return str(details[0].get("msg", error)).removeprefix("Value error, ")


def report_to_csv(report: FitnessReport) -> str:
    """CSV with columns solution_id, fitness, rank (1-based), best first"""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(["solution_id", "fitness", "rank"])
    for position, solution_id in enumerate(report.ranking, start=1):
        writer.writerow([solution_id, repr(report.fitness[solution_id]), position])
    return buffer.getvalue()


def format_report(report: FitnessReport) -> str:
    """Human-readable fitness report"""
    lines = [
        f"objective: {report.objective.value}",
        f"active parameters: {', '.join(report.active_params)}",
        "fitness:",
    ]
    width = max(len(solution_id) for solution_id in report.ranking)
    for position, solution_id in enumerate(report.ranking, start=1):
        lines.append(
            f"  {position}. {solution_id.ljust(width)}  {report.fitness[solution_id]:.10g}"
        )
    lines.append(f"best: {report.best}")
    return "\n".join(lines) + "\n"
