"""
Coxeter Workbench - Common Module
Errors, settings and tracing shared by every other package.
"""

from .errors import (
    WorkbenchError,
    InputError,
    ConfigurationError,
    UnknownGeneratorError,
    PreconditionError,
    NotRightAngledError,
    ImproperColoringError,
    StarConditionError,
)
from .settings import WorkbenchSettings, load_settings, get_settings, use_settings
from .tracing import traced, get_trace_recorder

__all__ = [
    "WorkbenchError",
    "InputError",
    "ConfigurationError",
    "UnknownGeneratorError",
    "PreconditionError",
    "NotRightAngledError",
    "ImproperColoringError",
    "StarConditionError",
    "WorkbenchSettings",
    "load_settings",
    "get_settings",
    "use_settings",
    "traced",
    "get_trace_recorder",
]
