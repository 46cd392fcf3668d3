"""
Error hierarchy shared by every service.

Each error carries a stable ``code`` and the process ``exit_code`` the CLI
returns for it, the same way an HTTP layer maps failures onto status codes.
"""

from typing import Any, Dict, Optional


class DyadboundError(Exception):
    """Base class for all domain failures"""

    code = "error"
    exit_code = 1

    def __init__(self, message: str):
        super().__init__(message)
        self.message = message

    def to_dict(self) -> Dict[str, Any]:
        return {"error": self.code, "message": self.message, "exit_code": self.exit_code}


class EdgeListParseError(DyadboundError):
    code = "parse_error"
    exit_code = 65

    def __init__(self, message: str, line_number: Optional[int] = None):
        if line_number is not None:
            message = f"line {line_number}: {message}"
        super().__init__(message)
        self.line_number = line_number


class GraphValidationError(DyadboundError):
    code = "validation_error"
    exit_code = 65


class DegreeRangeError(DyadboundError):
    code = "range_error"
    exit_code = 65


class DensityDomainError(DyadboundError):
    code = "domain_error"
    exit_code = 65


class GeneratorConfigError(DyadboundError):
    code = "config_error"
    exit_code = 78


class GenerationError(DyadboundError):
    code = "generation_error"
    exit_code = 70

    def __init__(self, message: str, seed: Optional[int] = None):
        if seed is not None:
            message = f"{message} (seed={seed})"
        super().__init__(message)
        self.seed = seed


class EnumerationBudgetError(DyadboundError):
    code = "budget_exceeded"
    exit_code = 75

    def __init__(self, subsets: int, budget: int):
        super().__init__(
            f"refusing to enumerate C(N, n1) = {subsets} subsets; budget is {budget}"
        )
        self.subsets = subsets
        self.budget = budget


class FileAccessError(DyadboundError):
    code = "io_error"
    exit_code = 74
