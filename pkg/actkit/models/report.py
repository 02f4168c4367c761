"""Verification suite reports."""

from typing import Any

from pydantic import BaseModel, Field, computed_field


class SuiteReport(BaseModel):
    """Outcome of one verification suite; it passes iff no violations were found."""

    suite: str
    monoid: str
    max_size: int | None = None
    instances: int = 0
    violations: list[str] = Field(default_factory=list)
    details: dict[str, Any] = Field(default_factory=dict)
    wall_time: float | None = None

    @computed_field  # type: ignore[prop-decorator]
    @property
    def passed(self) -> bool:
        return not self.violations

    def to_document(self, timing: bool = True) -> dict[str, Any]:
        data = self.model_dump()
        if not timing:
            data["wall_time"] = None
        return data
