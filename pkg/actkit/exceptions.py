"""Domain errors raised by the algebra core.

Every error carries a stable machine ``code`` and a ``details`` dict so the CLI
can report it as a single-line JSON object.
"""

from typing import Any


class ActkitError(Exception):
    """Base class for all actkit errors."""

    code = "ACTKIT_ERROR"

    def __init__(self, message: str, **details: Any):
        super().__init__(message)
        self.message = message
        self.details = details


class MalformedDocument(ActkitError):
    code = "MALFORMED_DOCUMENT"


class UnknownLabel(ActkitError):
    code = "UNKNOWN_LABEL"

    def __init__(self, label: str, where: str = "document"):
        super().__init__(f"Unknown label '{label}' in {where}", label=label, where=where)


class MissingIdentity(ActkitError):
    code = "MISSING_IDENTITY"


class NonAssociative(ActkitError):
    code = "NON_ASSOCIATIVE"

    def __init__(self, s: str, t: str, u: str):
        super().__init__(
            f"Operation is not associative: ({s}·{t})·{u} != {s}·({t}·{u})", s=s, t=t, u=u
        )


class UnsupportedParams(ActkitError):
    code = "UNSUPPORTED_PARAMS"


class NotIdempotent(ActkitError):
    code = "NOT_IDEMPOTENT"

    def __init__(self, label: str):
        super().__init__(f"Element '{label}' is not idempotent", element=label)


class IdentityAxiomViolation(ActkitError):
    code = "IDENTITY_AXIOM_VIOLATION"

    def __init__(self, a: str):
        super().__init__(f"Identity axiom fails: {a}·1 != {a}", a=a)


class CompatibilityViolation(ActkitError):
    code = "COMPATIBILITY_VIOLATION"

    def __init__(self, a: str, s: str, t: str):
        super().__init__(f"Compatibility fails: {a}·({s}{t}) != ({a}·{s})·{t}", a=a, s=s, t=t)


class MonoidMismatch(ActkitError):
    code = "MONOID_MISMATCH"

    def __init__(self, message: str = "Acts are defined over different monoids"):
        super().__init__(message)


class EmptyAct(ActkitError):
    code = "EMPTY_ACT"

    def __init__(self, message: str = "Acts must be non-empty"):
        super().__init__(message)


class SizeBoundExceeded(ActkitError):
    code = "SIZE_BOUND_EXCEEDED"

    def __init__(self, size: int, bound: int):
        super().__init__(
            f"Act of size {size} exceeds the brute-force bound {bound}", size=size, bound=bound
        )


class BudgetExceeded(ActkitError):
    code = "BUDGET_EXCEEDED"

    def __init__(self, what: str, needed: int, budget: int):
        super().__init__(
            f"Search budget exceeded for {what}: needs at least {needed}, budget is {budget}",
            what=what,
            needed=needed,
            budget=budget,
        )


class MonoidTooLarge(ActkitError):
    code = "MONOID_TOO_LARGE"

    def __init__(self, size: int, limit: int):
        super().__init__(
            f"Monoid has {size} elements, limit is {limit} (raise with --max-monoid-size)",
            size=size,
            limit=limit,
        )


class WitnessError(ActkitError):
    """A cancellation witness failed to re-verify."""

    code = "WITNESS_ERROR"


class TheoremViolation(ActkitError):
    """A derived check disagreed with the decision procedure."""

    code = "THEOREM_VIOLATION"
