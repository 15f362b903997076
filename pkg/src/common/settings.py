"""
Settings

Loads config/config.json into validated pydantic models and applies
environment overrides from .env.
"""

import json
import logging
import os
from pathlib import Path
from typing import Any, Dict, Optional

from dotenv import load_dotenv
from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator

from .errors import ConfigurationError

logger = logging.getLogger(__name__)

BASE_DIR = Path(__file__).resolve().parents[2]
DEFAULT_CONFIG_PATH = BASE_DIR / "config" / "config.json"

LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")


class AppSettings(BaseModel):
    model_config = ConfigDict(extra="ignore")

    name: str = "Coxeter Workbench"
    log_level: str = "WARNING"
    log_to_file: bool = False

    @field_validator("log_level")
    @classmethod
    def _known_level(cls, value: str) -> str:
        value = value.upper()
        if value not in LOG_LEVELS:
            raise ValueError(f"log_level must be one of {', '.join(LOG_LEVELS)}")
        return value


class PathSettings(BaseModel):
    model_config = ConfigDict(extra="ignore")

    logs_dir: str = "logs"
    data_dir: str = "data"


class ColoringSettings(BaseModel):
    """Limits of the exhaustive search; larger inputs fall back to greedy."""

    model_config = ConfigDict(extra="ignore")

    exact_vertex_limit: int = Field(default=25, ge=1)
    exact_color_limit: int = Field(default=6, ge=1)


class TietzeSettings(BaseModel):
    model_config = ConfigDict(extra="ignore")

    effort: int = Field(default=2, ge=0, le=3)
    # longest substitution allowed at each effort level; level 3 is unbounded
    substitution_bounds: Dict[int, int] = Field(default_factory=lambda: {0: 0, 1: 2, 2: 8})


class HomologySettings(BaseModel):
    model_config = ConfigDict(extra="ignore")

    jobs: int = Field(default=1, ge=1)


class VerificationSettings(BaseModel):
    model_config = ConfigDict(extra="ignore")

    random_seed: int = 2718
    rewrite_trials: int = Field(default=1000, ge=1)
    rewrite_steps: int = Field(default=50, ge=1)


class WorkbenchSettings(BaseModel):
    model_config = ConfigDict(extra="ignore")

    app: AppSettings = Field(default_factory=AppSettings)
    paths: PathSettings = Field(default_factory=PathSettings)
    coloring: ColoringSettings = Field(default_factory=ColoringSettings)
    tietze: TietzeSettings = Field(default_factory=TietzeSettings)
    homology: HomologySettings = Field(default_factory=HomologySettings)
    verification: VerificationSettings = Field(default_factory=VerificationSettings)

    def data_path(self, *parts: str) -> Path:
        """Resolve a path under the data directory."""
        base = Path(self.paths.data_dir).expanduser()
        if not base.is_absolute():
            base = BASE_DIR / base
        return base.joinpath(*parts)

    def logs_path(self) -> Path:
        base = Path(self.paths.logs_dir).expanduser()
        if not base.is_absolute():
            base = BASE_DIR / base
        return base


def _strip_comments(node: Any) -> Any:
    if isinstance(node, dict):
        return {k: _strip_comments(v) for k, v in node.items() if not k.startswith("_")}
    if isinstance(node, list):
        return [_strip_comments(v) for v in node]
    return node


# environment variable -> (section, key)
ENV_OVERRIDES = {
    "WORKBENCH_LOG_LEVEL": ("app", "log_level"),
    "WORKBENCH_JOBS": ("homology", "jobs"),
    "WORKBENCH_EXACT_VERTEX_LIMIT": ("coloring", "exact_vertex_limit"),
}


def load_settings(path: Optional[Path] = None) -> WorkbenchSettings:
    """
    Load settings from file, then apply environment overrides.

    A missing file is not an error; defaults are used.
    """
    load_dotenv(BASE_DIR / ".env")

    if path is None:
        env_path = os.environ.get("WORKBENCH_CONFIG")
        path = Path(env_path) if env_path else DEFAULT_CONFIG_PATH

    raw: Dict[str, Any] = {}
    if path.exists():
        try:
            with open(path, encoding="utf-8") as f:
                raw = _strip_comments(json.load(f))
        except json.JSONDecodeError as e:
            raise ConfigurationError(e.msg, source=str(path), location=f"line {e.lineno}, column {e.colno}")
    else:
        logger.debug(f"Config file {path} not found, using defaults")

    for variable, (section, key) in ENV_OVERRIDES.items():
        value = os.environ.get(variable)
        if value:
            raw.setdefault(section, {})[key] = value

    try:
        return WorkbenchSettings.model_validate(raw)
    except ValidationError as e:
        first = e.errors()[0]
        location = ".".join(str(part) for part in first["loc"])
        raise ConfigurationError(first["msg"], source=str(path), location=location)


_settings: Optional[WorkbenchSettings] = None


def get_settings() -> WorkbenchSettings:
    """Get or create the process-wide settings"""
    global _settings
    if _settings is None:
        _settings = load_settings()
    return _settings


def use_settings(settings: WorkbenchSettings) -> None:
    """Replace the process-wide settings (CLI --config, tests)."""
    global _settings
    _settings = settings
