"""Output format utilities."""

import json
import sys
from typing import Any

from rich.console import Console

# Progress and status go to stderr; stdout carries only JSON
console = Console(stderr=True)

# Global output format state
_pretty = False


def set_pretty(pretty: bool) -> None:
    """Set the global pretty-printing flag."""
    global _pretty
    _pretty = pretty


def is_pretty() -> bool:
    """Get the current pretty-printing flag."""
    return _pretty


def dumps(data: Any) -> str:
    """Serialize deterministically: compact by default, indented with --pretty."""
    if _pretty:
        return json.dumps(data, indent=2, ensure_ascii=False)
    return json.dumps(data, separators=(",", ":"), ensure_ascii=False)


def emit_json(data: Any) -> None:
    """Write a JSON document to stdout."""
    print(dumps(data))


def emit_error(code: str, message: str, details: dict | None = None) -> None:
    """Write a single-line JSON error object to stdout.

    Always compact, whatever the --pretty setting, so callers can parse the
    last line of output.
    """
    error_obj: dict[str, Any] = {"error": True, "code": code, "message": message}
    if details:
        error_obj["details"] = details
    print(json.dumps(error_obj, separators=(",", ":"), ensure_ascii=False, default=str))
    sys.stdout.flush()


def set_quiet(quiet: bool) -> None:
    """Silence (or restore) progress output on stderr."""
    console.quiet = quiet
