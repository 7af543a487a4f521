"""Canonical JSON output and file helpers.

Reports are deterministic byte-for-byte: keys are sorted and floats use the
shortest round-trip representation.
"""

import json
import sys
from pathlib import Path
from typing import Any

from pydantic import BaseModel

from ..errors import InputError


def to_jsonable(obj: Any) -> Any:
    """Convert pydantic models (possibly nested in containers) to plain JSON data."""
    if isinstance(obj, BaseModel):
        return obj.model_dump(mode="json")
    if isinstance(obj, dict):
        return {str(key): to_jsonable(value) for key, value in obj.items()}
    if isinstance(obj, list | tuple):
        return [to_jsonable(value) for value in obj]
    return obj


def canonical_json(obj: Any) -> str:
    """Serialize ``obj`` as canonical JSON terminated by a newline."""
    return (
        json.dumps(
            to_jsonable(obj),
            sort_keys=True,
            indent=2,
            ensure_ascii=False,
            allow_nan=False,
        )
        + "\n"
    )


def read_text(path: str | Path) -> str:
    """Read a text file, with ``-`` meaning standard input."""
    if str(path) == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise InputError(f"Cannot read {path}: {e.strerror or e}") from e


def write_text(path: str | Path | None, text: str) -> None:
    """Write text to ``path``; ``None`` or ``-`` writes to standard output."""
    if path is None or str(path) == "-":
        sys.stdout.write(text)
        sys.stdout.flush()
        return
    try:
        target = Path(path)
        target.parent.mkdir(parents=True, exist_ok=True)
        target.write_text(text, encoding="utf-8")
    except OSError as e:
        raise InputError(f"Cannot write {path}: {e.strerror or e}") from e


def parse_json(text: str, source: str = "<input>") -> Any:
    """Parse JSON text, reporting line and column on failure."""
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise InputError(
            f"{source}: malformed JSON at line {e.lineno}, column {e.colno}: {e.msg}"
        ) from e
