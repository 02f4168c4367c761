"""Export utility for writing reports to JSON files."""

from pathlib import Path
from typing import Any

from actkit.utils.output import dumps


def export_to_json(data: Any, file_path: str) -> None:
    """Write data as JSON (same formatting as stdout), creating parent directories.

    Args:
        data: Data to export.
        file_path: Output file path.
    """
    path = Path(file_path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(dumps(data) + "\n")
