"""Simulation log serialization"""

import csv
import io
from enum import Enum

from ..models.scenario import LogRecord, SimulationLog


class ReportFormat(str, Enum):
    CSV = "csv"
    TEXT = "text"


CSV_COLUMNS = ["tick", "event", "best", "active_set", "mode", "fitness_of_best"]


def _fitness_of_best(record: LogRecord) -> float:
    return record.fitness[record.best]


def _csv(log: SimulationLog) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for record in log.records:
        writer.writerow(
            [
                record.tick,
                record.event,
                record.best,
                ";".join(record.active_set),
                record.mode.value,
                repr(_fitness_of_best(record)),
            ]
        )
    return buffer.getvalue()


def _text(log: SimulationLog) -> str:
    lines = [f"Scenario: {log.title}"] if log.title else []
    for record in log.records:
        line = (
            f"[tick {record.tick}] {record.event}: best={record.best} "
            f"active=[{', '.join(record.active_set)}] mode={record.mode.value} "
            f"f(best)={_fitness_of_best(record):.6g}"
        )
        if record.drop_detected:
            line += " drop"
        if record.reaction:
            line += f" reaction={record.reaction}"
        if record.support_fitness is not None:
            line += f" support_fitness={record.support_fitness:.6g}"
        lines.append(line)
    return "\n".join(lines) + "\n"


def report(log: SimulationLog, format: ReportFormat | str = ReportFormat.TEXT) -> str:
    """Serialize a simulation log as CSV or a text timeline"""
    if ReportFormat(format) is ReportFormat.CSV:
        return _csv(log)
    return _text(log)
