"""Canonical forms and isomorphism search for finite acts."""

from actkit.algebra.act import ActMorphism, FiniteAct, principal_right_act
from actkit.algebra.decomposition import component_forms, decompose
from actkit.algebra.monoid import FiniteMonoid, idempotents
from actkit.exceptions import MonoidMismatch


def _sorted_components(act: FiniteAct):
    decomposition = decompose(act)
    labelled = zip(decomposition.components, component_forms(decomposition))
    # stable sort: equal forms keep component order
    return sorted(labelled, key=lambda item: item[1][0])


def canonical_form(act: FiniteAct) -> dict:
    """Normal-form act document: canonical components sorted by form, labelled 0..m-1.

    Two acts over the same monoid have equal canonical forms iff they are
    isomorphic.
    """
    elements: list[str] = []
    action: list[list[str]] = []
    offset = 0
    for _, (form, _) in _sorted_components(act):
        for row in form.table:
            action.append([str(offset + b) for b in row])
        elements.extend(str(offset + i) for i in range(form.size))
        offset += form.size
    return {"monoid": act.monoid.to_document(), "elements": elements, "action": action}


def canonical_act(act: FiniteAct) -> FiniteAct:
    """The act whose document is :func:`canonical_form` of ``act``."""
    doc = canonical_form(act)
    action = tuple(tuple(int(b) for b in row) for row in doc["action"])
    return FiniteAct(monoid=act.monoid, carrier=tuple(doc["elements"]), action=action)


def find_isomorphism(source: FiniteAct, target: FiniteAct) -> ActMorphism | None:
    """An isomorphism ``source -> target``, or None.

    Components are matched by canonical form (the i-th component of a form in
    ``source`` goes to the i-th one in ``target``) and mapped through their
    canonical labellings.
    """
    if source.monoid != target.monoid:
        raise MonoidMismatch()
    if source.size != target.size:
        return None
    left = _sorted_components(source)
    right = _sorted_components(target)
    if len(left) != len(right):
        return None
    if any(lf[0] != rf[0] for (_, lf), (_, rf) in zip(left, right)):
        return None

    mapping = [0] * source.size
    for (left_block, (_, left_labels)), (right_block, (_, right_labels)) in zip(left, right):
        by_label = [0] * len(right_block)
        for i, label in enumerate(right_labels):
            by_label[label] = right_block[i]
        for i, label in enumerate(left_labels):
            mapping[left_block[i]] = by_label[label]
    return ActMorphism(source=source, target=target, map=tuple(mapping))


def are_isomorphic(source: FiniteAct, target: FiniteAct) -> bool:
    return find_isomorphism(source, target) is not None


def idempotent_classes(monoid: FiniteMonoid) -> list[list[int]]:
    """Partition E(S) by e ~ f iff eS ≅ fS; blocks ordered by smallest idempotent."""
    blocks: list[tuple[FiniteAct, list[int]]] = []
    for e in idempotents(monoid):
        principal = principal_right_act(monoid, e)
        for representative, block in blocks:
            if are_isomorphic(representative, principal):
                block.append(e)
                break
        else:
            blocks.append((principal, [e]))
    return [block for _, block in blocks]
