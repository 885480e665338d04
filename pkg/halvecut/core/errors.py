"""Exception hierarchy. Expected outcomes (parallel lines, infeasible LPs, violated
constraints) are returned as values; these are raised only for misuse or failure."""

from typing import Any, Optional


class HalvecutError(Exception):
    """Base class for every error raised by halvecut."""


class GeometryError(HalvecutError):
    pass


class NoDualError(GeometryError):
    """Vertical lines have no point dual."""


class EmptyInputError(GeometryError):
    pass


class NotSeparableError(GeometryError):
    pass


class CorridorError(HalvecutError):
    pass


class CuttingError(HalvecutError):
    pass


class RetriesExhaustedError(CuttingError):
    def __init__(self, message: str, face: Optional[Any] = None, weight: Optional[Any] = None, attempts: int = 0):
        super().__init__(message)
        self.face = face
        self.weight = weight
        self.attempts = attempts


class LPError(HalvecutError):
    pass


class IterationLimitError(LPError):
    def __init__(self, message: str, iterations: int = 0):
        super().__init__(message)
        self.iterations = iterations


class InstanceError(HalvecutError):
    """Invalid instance data or a malformed instance/result file."""


class SolverError(HalvecutError):
    pass
