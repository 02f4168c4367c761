"""Tests for JSON document input."""

import pytest

from actkit.exceptions import MalformedDocument
from actkit.utils.file_input import load_json_file


class TestLoadJsonFile:
    """Tests for load_json_file()."""

    def test_loads_object(self, tmp_path):
        path = tmp_path / "act.json"
        path.write_text('{"entries": {"a": "omega"}}')

        assert load_json_file(str(path)) == {"entries": {"a": "omega"}}

    def test_loads_list(self, tmp_path):
        path = tmp_path / "list.json"
        path.write_text("[1, 2]")

        assert load_json_file(path) == [1, 2]

    def test_missing_file(self, tmp_path):
        with pytest.raises(MalformedDocument) as exc_info:
            load_json_file(str(tmp_path / "nope.json"))

        assert "File not found" in exc_info.value.message

    def test_invalid_json(self, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text("{elements: [}")

        with pytest.raises(MalformedDocument) as exc_info:
            load_json_file(str(path))

        assert exc_info.value.details["path"] == str(path)

    def test_directory_is_malformed(self, tmp_path):
        with pytest.raises(MalformedDocument) as exc_info:
            load_json_file(tmp_path)

        assert "Cannot read" in exc_info.value.message
