"""Canonical labelling of finite acts.

A labelling is produced by choosing a root, labelling everything reachable
from it breadth-first (labelled elements in label order, monoid elements in
index order), then choosing the next root among what is still unlabelled.
Only the root choices branch, and roots are restricted to the unlabelled
elements of smallest invariant colour. Isomorphic acts therefore see the same
set of codes, and the smallest code is a complete invariant.
"""

import json
from dataclasses import dataclass
from functools import cached_property

from actkit.algebra.act import ActionTable, FiniteAct


@dataclass(frozen=True, order=True)
class ComponentForm:
    """Canonical action table of an act on labels 0..size-1.

    Forms order by size first, then lexicographically by table.
    """

    size: int
    table: ActionTable

    @cached_property
    def key(self) -> str:
        """Compact JSON of the table, used as a symbolic type id."""
        return json.dumps([list(row) for row in self.table], separators=(",", ":"))

    def to_document(self, monoid_document: dict) -> dict:
        labels = [str(i) for i in range(self.size)]
        return {
            "monoid": monoid_document,
            "elements": labels,
            "action": [[labels[b] for b in row] for row in self.table],
        }


def element_colours(act: FiniteAct) -> list[tuple]:
    """Isomorphism-invariant colour per element.

    The base colour is (-|aS|, |{s : a·s = a}|, in-degree from other
    elements); it is refined once by the base colours of a·s for each s.
    """
    m, n = act.size, act.monoid.size
    indegree = [0] * m
    for a, row in enumerate(act.action):
        for b in row:
            if b != a:
                indegree[b] += 1
    base = [
        (-len(set(row)), sum(1 for b in row if b == a), indegree[a])
        for a, row in enumerate(act.action)
    ]
    return [(base[a], tuple(base[act.action[a][s]] for s in range(n))) for a in range(m)]


def canonical_labelling(act: FiniteAct) -> tuple[ComponentForm, tuple[int, ...]]:
    """Return the canonical form of ``act`` and the labelling achieving it.

    ``labelling[a]`` is the canonical label of carrier index ``a``.
    """
    m, n = act.size, act.monoid.size
    action = act.action
    colours = element_colours(act)
    best: list = [None, None]  # code, order

    def close(order: list[int], pos: dict[int, int], start: int) -> None:
        i = start
        while i < len(order):
            for s in range(n):
                b = action[order[i]][s]
                if b not in pos:
                    pos[b] = len(order)
                    order.append(b)
            i += 1

    def search(order: list[int], pos: dict[int, int], done: int) -> None:
        if done == m:
            code = tuple(tuple(pos[b] for b in action[a]) for a in order)
            if best[0] is None or code < best[0]:
                best[0], best[1] = code, list(order)
            return
        free = [a for a in range(m) if a not in pos]
        lowest = min(colours[a] for a in free)
        for root in free:
            if colours[root] != lowest:
                continue
            branch_order = order + [root]
            branch_pos = dict(pos)
            branch_pos[root] = done
            close(branch_order, branch_pos, done)
            reached = len(branch_order)
            if best[0] is not None:
                prefix = tuple(
                    tuple(branch_pos[b] for b in action[a]) for a in branch_order[:reached]
                )
                if prefix > best[0][:reached]:
                    continue
            search(branch_order, branch_pos, reached)

    search([], {}, 0)
    code, order = best
    labelling = [0] * m
    for label, a in enumerate(order):
        labelling[a] = label
    return ComponentForm(size=m, table=code), tuple(labelling)
