"""Pydantic schemas for the JSON documents actkit reads and writes."""

from typing import Any, Literal

from pydantic import BaseModel, ConfigDict, Field, StrictInt, ValidationError, field_validator

from actkit.exceptions import MalformedDocument


class MonoidDocument(BaseModel):
    """A finite monoid given by its full multiplication table.

    ``table[i][j]`` is the label of ``elements[i]·elements[j]``.
    """

    model_config = ConfigDict(extra="forbid")

    elements: list[str] = Field(min_length=1)
    identity: str
    table: list[list[str]]

    @field_validator("elements")
    @classmethod
    def labels_are_unique(cls, v: list[str]) -> list[str]:
        if len(set(v)) != len(v):
            raise ValueError("element labels must be unique")
        return v


class ActDocument(BaseModel):
    """A finite right act; ``action[i][j]`` is the label of ``elements[i]·monoid.elements[j]``.

    ``monoid`` is either an inline monoid document or a reference string
    (a file path or a ``builtin:`` URI).
    """

    model_config = ConfigDict(extra="forbid")

    monoid: MonoidDocument | str
    elements: list[str] = Field(min_length=1)
    action: list[list[str]]

    @field_validator("elements")
    @classmethod
    def labels_are_unique(cls, v: list[str]) -> list[str]:
        if len(set(v)) != len(v):
            raise ValueError("carrier labels must be unique")
        return v


Multiplicity = StrictInt | Literal["omega"]


class SymbolicDocument(BaseModel):
    """A formal coproduct of indecomposable types and infinite families."""

    model_config = ConfigDict(extra="forbid")

    entries: dict[str, Multiplicity] = Field(default_factory=dict)
    families: dict[str, Multiplicity] = Field(default_factory=dict)


def parse_document(model: type[BaseModel], data: Any) -> Any:
    """Validate ``data`` against ``model``, mapping pydantic errors to MalformedDocument."""
    try:
        return model.model_validate(data)
    except ValidationError as e:
        first = e.errors()[0]
        location = ".".join(str(part) for part in first["loc"]) or "<root>"
        raise MalformedDocument(
            f"Invalid {model.__name__} at {location}: {first['msg']}",
            location=location,
            errors=e.error_count(),
        )
