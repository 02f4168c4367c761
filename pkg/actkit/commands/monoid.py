"""Monoid inspection commands."""

import click

from actkit.algebra.act import principal_right_act
from actkit.algebra.isomorphism import idempotent_classes
from actkit.algebra.monoid import idempotents
from actkit.config import get_config
from actkit.loaders import resolve_monoid
from actkit.utils.error import handle_actkit_error
from actkit.utils.output import emit_json


@click.command(name="idempotents")
@click.option("--monoid", "monoid_ref", required=True, help="Monoid file or builtin:<name>")
@click.option("--acts", "with_acts", is_flag=True, default=False, help="Include each eS act.")
@handle_actkit_error
def idempotents_cmd(monoid_ref, with_acts):
    """List idempotents and group them by e ~ f iff eS ≅ fS.

    Examples:
        actkit idempotents --monoid "builtin:full_transformation(2)"
    """
    monoid = resolve_monoid(monoid_ref, limit=get_config().max_monoid_size)
    labels = monoid.elements
    result = {
        "monoid": monoid.name,
        "idempotents": [labels[e] for e in idempotents(monoid)],
        "classes": [[labels[e] for e in block] for block in idempotent_classes(monoid)],
    }
    if with_acts:
        result["principal_acts"] = {
            labels[e]: principal_right_act(monoid, e).to_document() for e in idempotents(monoid)
        }
    emit_json(result)
