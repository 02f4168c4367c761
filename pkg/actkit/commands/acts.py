"""Commands on finite act documents: decompose, iso, coproduct, symbolize."""

from collections import Counter

import click

from actkit.algebra.act import coproduct
from actkit.algebra.decomposition import IsoSignature, component_forms, decompose
from actkit.algebra.isomorphism import find_isomorphism
from actkit.algebra.symbolic import symbolize
from actkit.config import get_config
from actkit.exceptions import MonoidMismatch
from actkit.loaders import load_act_file
from actkit.utils.error import handle_actkit_error
from actkit.utils.output import emit_json


def _load(path: str):
    return load_act_file(path, limit=get_config().max_monoid_size)


def decomposition_document(act) -> dict:
    """Components (with their original labels) and the isomorphism signature."""
    decomposition = decompose(act)
    parts = decomposition.component_acts()
    forms = component_forms(decomposition)
    monoid_doc = act.monoid.to_document()
    signature = IsoSignature.from_counter(Counter(form for form, _ in forms))
    return {
        "components": [part.to_document() for part in parts],
        "signature": signature.to_document(monoid_doc),
    }


@click.command(name="decompose")
@click.argument("act_file", type=click.Path())
@handle_actkit_error
def decompose_cmd(act_file):
    """Split an act into its indecomposable components.

    Examples:
        actkit decompose act.json
    """
    emit_json(decomposition_document(_load(act_file)))


@click.command(name="iso")
@click.argument("first", type=click.Path())
@click.argument("second", type=click.Path())
@handle_actkit_error
def iso_cmd(first, second):
    """Decide whether two acts are isomorphic and print an isomorphism.

    Examples:
        actkit iso a.json b.json
    """
    source, target = _load(first), _load(second)
    morphism = find_isomorphism(source, target)
    emit_json(
        {
            "isomorphic": morphism is not None,
            "map": None if morphism is None else morphism.to_document(),
        }
    )


@click.command(name="coproduct")
@click.argument("act_files", nargs=-1, required=True, type=click.Path())
@handle_actkit_error
def coproduct_cmd(act_files):
    """Disjoint union of acts; summand i's element x becomes "i.x".

    Examples:
        actkit coproduct a.json b.json
    """
    acts = [_load(path) for path in act_files]
    if any(act.monoid != acts[0].monoid for act in acts[1:]):
        raise MonoidMismatch()
    emit_json(coproduct(acts).to_document())


@click.command(name="symbolize")
@click.argument("act_file", type=click.Path())
@handle_actkit_error
def symbolize_cmd(act_file):
    """Rewrite a finite act as a symbolic act (type id -> multiplicity).

    Type ids are the compact canonical action tables of the components.
    """
    emit_json(symbolize(_load(act_file)).to_document())
