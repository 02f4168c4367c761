"""Cancellation commands for symbolic and finite acts."""

import click

from actkit.algebra.symbolic import decide_cancellable, decide_internally_cancellable
from actkit.config import get_config
from actkit.loaders import load_symbolic_or_act_file
from actkit.utils.error import handle_actkit_error
from actkit.utils.output import emit_json


@click.command(name="cancellable")
@click.argument("document", type=click.Path())
@handle_actkit_error
def cancellable_cmd(document):
    """Decide whether A ⊔ B ≅ A ⊔ C forces B ≅ C.

    DOCUMENT is a symbolic act or a finite act (which is symbolized first).
    A negative verdict comes with witnesses B and C.

    Examples:
        actkit cancellable sym.json
    """
    act, _ = load_symbolic_or_act_file(document, limit=get_config().max_monoid_size)
    emit_json(decide_cancellable(act).to_document())


@click.command(name="internal")
@click.argument("document", type=click.Path())
@handle_actkit_error
def internal_cmd(document):
    """Decide whether A = C ⊔ D = E ⊔ F with D ≅ F forces C ≅ E.

    A negative verdict comes with the four summands C, D, E, F.

    Examples:
        actkit internal sym.json
    """
    act, _ = load_symbolic_or_act_file(document, limit=get_config().max_monoid_size)
    emit_json(decide_internally_cancellable(act).to_document())
