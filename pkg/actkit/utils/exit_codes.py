"""Semantic exit codes for machine-readable CLI results."""

# Success (including a negative cancellation verdict: that is an answer, not a failure)
SUCCESS = 0

# A verification suite found violations, or an internal consistency check failed
VIOLATIONS_FOUND = 1

# Unparseable or invalid input, unknown verb or option, exceeded search budget
INPUT_ERROR = 2


def exit_code_for_error(code: str) -> int:
    """Map an error code to a semantic exit code.

    Args:
        code: Machine error code (see actkit.exceptions)

    Returns:
        Semantic exit code
    """
    if code in ("WITNESS_ERROR", "THEOREM_VIOLATION", "UNEXPECTED_ERROR"):
        return VIOLATIONS_FOUND
    return INPUT_ERROR
