"""Error handling for CLI commands."""

import sys
from functools import wraps

import click

from actkit.exceptions import ActkitError
from actkit.utils.exit_codes import VIOLATIONS_FOUND, exit_code_for_error
from actkit.utils.output import emit_error


def handle_actkit_error(func):
    """Decorator turning domain errors into a JSON error object and an exit code."""

    @wraps(func)
    def wrapper(*args, **kwargs):
        try:
            return func(*args, **kwargs)
        except click.ClickException:
            raise
        except ActkitError as e:
            emit_error(e.code, e.message, e.details)
            sys.exit(exit_code_for_error(e.code))
        except (FileNotFoundError, ValueError) as e:
            emit_error("MALFORMED_DOCUMENT", str(e))
            sys.exit(exit_code_for_error("MALFORMED_DOCUMENT"))
        except Exception as e:
            emit_error("UNEXPECTED_ERROR", f"Unexpected error: {e}")
            sys.exit(VIOLATIONS_FOUND)

    return wrapper
