"""Exception hierarchy"""

from typing import Optional


class DsoError(Exception):
    """Base class for every error raised by the toolkit"""


class DegenerateDataError(DsoError):
    """The data is well-formed but cannot be ranked meaningfully"""


class InputError(DsoError):
    """The input names something that does not exist or is malformed"""


class EmptySpecList(InputError):
    """Fitness requested over an empty parameter list"""


class ZeroDenominator(DegenerateDataError):
    """Inverse parameters sum (plus product) to zero"""


class NonFiniteResult(DegenerateDataError):
    """Fitness overflowed to a non-finite value"""


class AllParametersConstant(DegenerateDataError):
    """Every parameter has the same value across all solutions"""


class SingleSolution(DegenerateDataError):
    """A reaction needs an alternative solution but none exists"""


class UnknownSolution(InputError):
    def __init__(self, solution_id: str):
        super().__init__(f"unknown solution '{solution_id}'")
        self.solution_id = solution_id


class UnknownParameter(InputError):
    def __init__(self, name: str):
        super().__init__(f"unknown parameter '{name}'")
        self.name = name


class DimensionMismatch(InputError):
    def __init__(self, expected: int, got: int):
        super().__init__(f"expected a point of dimension {expected}, got {got}")
        self.expected = expected
        self.got = got


class TooLarge(InputError):
    """Exhaustive enumeration refused for the instance size"""


class ParseError(InputError):
    """Malformed input document, with the offending line and field"""

    def __init__(self, message: str, line: Optional[int] = None, field: Optional[str] = None):
        location = []
        if line is not None:
            location.append(f"line {line}")
        if field is not None:
            location.append(f"field '{field}'")
        prefix = f"{', '.join(location)}: " if location else ""
        super().__init__(f"{prefix}{message}")
        self.line = line
        self.field = field


class ValidationError(InputError):
    """A well-formed document that violates a domain invariant"""


class TickError(DsoError):
    """An error raised while a scenario event was being processed"""

    def __init__(self, tick: int, cause: DsoError):
        super().__init__(f"tick {tick}: {cause}")
        self.tick = tick
        self.cause = cause


class NoAvailableTour(DegenerateDataError):
    """Every candidate tour uses an unavailable edge"""
