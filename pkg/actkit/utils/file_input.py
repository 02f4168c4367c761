"""JSON document input."""

import json
from pathlib import Path

from actkit.exceptions import MalformedDocument


def load_json_file(file_path: str | Path) -> dict | list:
    """Load and parse a JSON file.

    Args:
        file_path: Path to JSON file.

    Returns:
        Parsed JSON data (dict or list).

    Raises:
        MalformedDocument: If the file cannot be read or contains invalid JSON.
    """
    path = Path(file_path)
    if not path.exists():
        raise MalformedDocument(f"File not found: {file_path}", path=str(file_path))

    try:
        text = path.read_text()
    except OSError as e:
        raise MalformedDocument(f"Cannot read {file_path}: {e.strerror}", path=str(file_path))

    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise MalformedDocument(f"Invalid JSON in {file_path}: {e}", path=str(file_path))
