"""Distance matrix ingestion and tour export"""

import csv
import io
from pathlib import Path
from typing import List, Sequence

import pydantic

from ..errors import ParseError, ValidationError
from ..fitness.io import parse_float
from ..models.tsp import DistanceMatrix, Tour


def parse_matrix(text: str) -> DistanceMatrix:
    """n rows of n comma-separated reals; blank lines and # comments are skipped"""
    rows: List[List[float]] = []
    reader = csv.reader(io.StringIO(text))
    for row in reader:
        line = reader.line_num
        if not row or all(not cell.strip() for cell in row) or row[0].lstrip().startswith("#"):
            continue
        rows.append(
            [
                parse_float(cell, line, f"row {len(rows) + 1}, column {column}")
                for column, cell in enumerate(row, start=1)
            ]
        )
    if not rows:
        raise ParseError("distance matrix is empty")

    n = len(rows)
    for index, row in enumerate(rows, start=1):
        if len(row) != n:
            raise ParseError(
                f"row {index} has {len(row)} entries, expected {n}", field=f"row {index}"
            )
    try:
        return DistanceMatrix(d=tuple(tuple(row) for row in rows))
    except pydantic.ValidationError as e:
        message = str(e.errors()[0].get("msg", e)).removeprefix("Value error, ")
        raise ValidationError(message) from None


def load_matrix(path: Path) -> DistanceMatrix:
    return parse_matrix(Path(path).read_text(encoding="utf-8"))


def _number(value: float) -> str:
    return str(int(value)) if float(value).is_integer() else repr(value)


def tours_to_csv(tours: Sequence[Tour]) -> str:
    """CSV rows (start, sequence, weight); the sequence is space separated"""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(["start", "sequence", "weight"])
    for tour in tours:
        writer.writerow([tour.start, tour.label(), _number(tour.weight)])
    return buffer.getvalue()


def format_tours(tours: Sequence[Tour], heading: str = "Path from city {start}:") -> str:
    """
    Text listing, one tour per line.

    `heading` is formatted with `start` and `index` (1-based position).
    """
    lines = [
        f"{heading.format(start=tour.start, index=index)} {tour.label()} "
        f"weight = {_number(tour.weight)}"
        for index, tour in enumerate(tours, start=1)
    ]
    return "\n".join(lines) + "\n"
