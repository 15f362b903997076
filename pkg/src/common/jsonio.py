"""
JSON Documents

Reading and writing the workbench's JSON files. Syntax errors keep their
line and column; schema errors keep the pydantic location path.
"""

import json
from pathlib import Path
from typing import Any, Type, TypeVar, Union

from pydantic import BaseModel, ValidationError

from .errors import InputError

ModelT = TypeVar("ModelT", bound=BaseModel)


def load_json_text(text: str, source: str = "<input>") -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise InputError(e.msg, source=source, location=f"line {e.lineno}, column {e.colno}")


def read_json(path: Union[str, Path]) -> Any:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except FileNotFoundError:
        raise InputError("file not found", source=str(path))
    except UnicodeDecodeError as e:
        raise InputError(f"not UTF-8 ({e.reason})", source=str(path))
    return load_json_text(text, source=str(path))


def validate_document(model: Type[ModelT], raw: Any, source: str = "<input>") -> ModelT:
    try:
        return model.model_validate(raw)
    except ValidationError as e:
        first = e.errors()[0]
        location = ".".join(str(part) for part in first["loc"]) or None
        raise InputError(first["msg"], source=source, location=location)


def dump_json(document: Any) -> str:
    """Canonical form: sorted keys, two-space indent, trailing newline."""
    return json.dumps(document, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def write_json(path: Union[str, Path], document: Any) -> None:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(dump_json(document), encoding="utf-8")
