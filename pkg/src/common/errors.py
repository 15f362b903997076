"""
Error Types

One hierarchy for everything the workbench can refuse to do.
Each error carries the object it is about and the CLI exit code it maps to.
"""

from typing import Any, Optional


class WorkbenchError(Exception):
    """Base class for all workbench failures."""

    exit_code = 1

    def __init__(self, message: str):
        self.message = message
        super().__init__(self.message)


class InputError(WorkbenchError):
    """Raised when an input document or value cannot be accepted."""

    exit_code = 2

    def __init__(self, message: str, source: Optional[str] = None, location: Optional[str] = None):
        self.source = source
        self.location = location
        prefix = ""
        if source:
            prefix = f"{source}: "
        if location:
            prefix = f"{prefix}{location}: "
        super().__init__(f"{prefix}{message}")


class ConfigurationError(InputError):
    """Raised when the settings file or an environment override is invalid."""


class UnknownGeneratorError(InputError):
    """Raised when a vertex or generator name is not part of the object."""

    def __init__(self, name: str, context: str = "system"):
        self.name = name
        super().__init__(f"unknown generator {name!r} in {context}")


class PreconditionError(WorkbenchError):
    """Raised when an operation's hypotheses do not hold for its input."""

    exit_code = 3

    def __init__(self, operation: str, message: str, subject: Any = None):
        self.operation = operation
        self.subject = subject
        super().__init__(f"{operation}: {message}")


class NotRightAngledError(PreconditionError):
    """Raised by operations implemented for right-angled systems only."""

    def __init__(self, operation: str, pair: Optional[tuple] = None):
        detail = "system is not right-angled"
        if pair is not None:
            detail = f"{detail} (label on {pair[0]}-{pair[1]} is neither 2 nor infinity)"
        super().__init__(operation, detail, subject=pair)


class ImproperColoringError(PreconditionError):
    """Raised when two adjacent vertices share a colour."""

    def __init__(self, operation: str, edge: tuple):
        super().__init__(operation, f"adjacent vertices {edge[0]} and {edge[1]} share a colour", subject=edge)


class StarConditionError(PreconditionError):
    """Raised when the star of a vertex misses a colour."""

    def __init__(self, operation: str, vertex: str, missing: list):
        self.missing = missing
        super().__init__(
            operation,
            f"star of {vertex} has no vertex of colour {', '.join(missing)}",
            subject=vertex,
        )
