"""Configuration management for actkit."""

import sys

from pydantic import Field, ValidationError, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict

from actkit.algebra.decomposition import DEFAULT_SPLIT_BOUND
from actkit.algebra.oracle import DEFAULT_ENUMERATION_BUDGET, DEFAULT_TRIPLE_BUDGET
from actkit.utils.exit_codes import INPUT_ERROR
from actkit.utils.output import emit_error


class ActkitConfig(BaseSettings):
    """Search limits and defaults, read from ACTKIT_* environment variables."""

    # Overrides both search budgets when set
    budget: int | None = Field(default=None, alias="ACTKIT_BUDGET")

    enumeration_budget: int = DEFAULT_ENUMERATION_BUDGET
    triple_budget: int = DEFAULT_TRIPLE_BUDGET
    brute_force_bound: int = DEFAULT_SPLIT_BOUND
    max_monoid_size: int = 64
    workers: int = 1

    model_config = SettingsConfigDict(
        env_prefix="ACTKIT_",
        env_file=".env",
        env_file_encoding="utf-8",
        extra="ignore",
        populate_by_name=True,
    )

    @field_validator(
        "budget",
        "enumeration_budget",
        "triple_budget",
        "brute_force_bound",
        "max_monoid_size",
        "workers",
    )
    @classmethod
    def must_be_positive(cls, v: int | None) -> int | None:
        if v is not None and v < 1:
            raise ValueError("must be a positive integer")
        return v

    @property
    def effective_enumeration_budget(self) -> int:
        return self.budget if self.budget is not None else self.enumeration_budget

    @property
    def effective_triple_budget(self) -> int:
        return self.budget if self.budget is not None else self.triple_budget


def load_config() -> ActkitConfig:
    """Load and validate configuration; exit with INPUT_ERROR on bad values."""
    try:
        return ActkitConfig()
    except ValidationError as e:
        first = e.errors()[0]
        location = ".".join(str(part) for part in first["loc"])
        emit_error("CONFIG_ERROR", f"Configuration error at {location}: {first['msg']}")
        sys.exit(INPUT_ERROR)


def get_config() -> ActkitConfig:
    """The configuration prepared by the root command, or a freshly loaded one.

    Reads the --max-monoid-size override from the Click context if available.
    """
    import click

    ctx = click.get_current_context(silent=True)
    if ctx is not None:
        root = ctx.find_root()
        if root.obj and "config" in root.obj:
            return root.obj["config"]
    return load_config()
