"""Tests for export output utility (dict -> JSON file)."""

import json

from actkit.utils.export import export_to_json
from actkit.utils.output import set_pretty


class TestExportToJson:
    """Tests for export_to_json()."""

    def test_exports_dict_to_file(self, tmp_path):
        data = {"passed": True, "reports": []}
        output = tmp_path / "report.json"

        export_to_json(data, str(output))

        assert json.loads(output.read_text()) == data

    def test_creates_parent_directories(self, tmp_path):
        output = tmp_path / "runs" / "z2" / "report.json"

        export_to_json({"count": 3}, str(output))

        assert json.loads(output.read_text()) == {"count": 3}

    def test_matches_stdout_format(self, tmp_path):
        output = tmp_path / "out.json"

        export_to_json({"key": "value"}, str(output))

        assert output.read_text() == '{"key":"value"}\n'

    def test_pretty_when_requested(self, tmp_path):
        set_pretty(True)
        output = tmp_path / "out.json"

        export_to_json({"key": "value"}, str(output))

        text = output.read_text()
        assert "  " in text  # indented
        assert text.endswith("\n")
