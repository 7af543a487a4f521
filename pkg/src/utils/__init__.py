"""Utility functions and classes shared across the toolkit."""

from .logging import LoggingConfig
from .serialization import canonical_json, parse_json, read_text, to_jsonable, write_text

__all__ = [
    "LoggingConfig",
    "canonical_json",
    "parse_json",
    "read_text",
    "to_jsonable",
    "write_text",
]
