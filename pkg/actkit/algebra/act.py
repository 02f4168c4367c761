"""Finite right acts over finite monoids, their constructors and morphisms."""

from dataclasses import dataclass
from itertools import product
from typing import Iterable, Sequence

from actkit.algebra.monoid import FiniteMonoid, principal_right_ideal, require_idempotent
from actkit.exceptions import (
    CompatibilityViolation,
    EmptyAct,
    IdentityAxiomViolation,
    MalformedDocument,
    MonoidMismatch,
    UnknownLabel,
)
from actkit.models.documents import ActDocument, parse_document

ActionTable = tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class FiniteAct:
    """A right S-act: ``action[a][s]`` is the carrier index of ``a·s``."""

    monoid: FiniteMonoid
    carrier: tuple[str, ...]
    action: ActionTable

    @property
    def size(self) -> int:
        return len(self.carrier)

    def act(self, a: int, s: int) -> int:
        return self.action[a][s]

    def index(self, label: str) -> int:
        try:
            return self.carrier.index(label)
        except ValueError:
            raise UnknownLabel(label, "act carrier")

    def to_document(self) -> dict:
        labels = self.carrier
        return {
            "monoid": self.monoid.to_document(),
            "elements": list(labels),
            "action": [[labels[b] for b in row] for row in self.action],
        }


@dataclass(frozen=True)
class ActMorphism:
    """A map of carriers ``source -> target`` given by target indices."""

    source: FiniteAct
    target: FiniteAct
    map: tuple[int, ...]

    def to_document(self) -> dict[str, str]:
        return {
            self.source.carrier[a]: self.target.carrier[b] for a, b in enumerate(self.map)
        }


def find_axiom_violation(
    monoid: FiniteMonoid, action: ActionTable
) -> tuple[str, tuple[int, ...]] | None:
    """Return the first failing act axiom as ``("identity", (a,))`` or
    ``("compatibility", (a, s, t))``, or None if both axioms hold."""
    one = monoid.identity
    for a, row in enumerate(action):
        if row[one] != a:
            return "identity", (a,)
    n = monoid.size
    table = monoid.table
    for a, row in enumerate(action):
        for s, t in product(range(n), repeat=2):
            if action[row[s]][t] != row[table[s][t]]:
                return "compatibility", (a, s, t)
    return None


def _checked_act(monoid: FiniteMonoid, carrier: tuple[str, ...], action: ActionTable) -> FiniteAct:
    if not carrier:
        raise EmptyAct()
    violation = find_axiom_violation(monoid, action)
    if violation is not None:
        kind, where = violation
        if kind == "identity":
            raise IdentityAxiomViolation(carrier[where[0]])
        a, s, t = where
        raise CompatibilityViolation(carrier[a], monoid.elements[s], monoid.elements[t])
    return FiniteAct(monoid=monoid, carrier=carrier, action=action)


def act_from_table(
    monoid: FiniteMonoid, carrier: Sequence[str], action: Iterable[Iterable[int]]
) -> FiniteAct:
    """Build an act from an index table, checking both act axioms."""
    table = tuple(tuple(row) for row in action)
    carrier = tuple(carrier)
    m, n = len(carrier), monoid.size
    if len(table) != m or any(len(row) != n for row in table):
        raise MalformedDocument(f"Action table must be {m}x{n}", rows=m, columns=n)
    if any(not 0 <= b < m for row in table for b in row):
        raise MalformedDocument("Action table refers outside the carrier")
    return _checked_act(monoid, carrier, table)


def validate_act(monoid: FiniteMonoid, doc: dict | ActDocument) -> FiniteAct:
    """Build a validated act over ``monoid`` from an act document.

    The document's own ``monoid`` field is resolved by the caller; see
    :mod:`actkit.loaders`.
    """
    parsed = doc if isinstance(doc, ActDocument) else parse_document(ActDocument, doc)
    carrier = tuple(parsed.elements)
    m, n = len(carrier), monoid.size
    if len(parsed.action) != m or any(len(row) != n for row in parsed.action):
        raise MalformedDocument(f"Action table must be {m}x{n}", rows=m, columns=n)
    index = {label: i for i, label in enumerate(carrier)}
    rows = []
    for row in parsed.action:
        try:
            rows.append(tuple(index[label] for label in row))
        except KeyError as e:
            raise UnknownLabel(e.args[0], "action table")
    return _checked_act(monoid, carrier, tuple(rows))


# --- constructors -----------------------------------------------------------


def regular_act(monoid: FiniteMonoid) -> FiniteAct:
    """S acting on itself by right multiplication."""
    return FiniteAct(monoid=monoid, carrier=monoid.elements, action=monoid.table)


def coproduct(acts: Sequence[FiniteAct]) -> FiniteAct:
    """Disjoint union; summand ``i``'s element ``x`` is labelled ``"i.x"``."""
    if not acts:
        raise EmptyAct("Coproduct needs at least one summand")
    monoid = acts[0].monoid
    if any(A.monoid != monoid for A in acts[1:]):
        raise MonoidMismatch()

    carrier: list[str] = []
    action: list[tuple[int, ...]] = []
    offset = 0
    for i, A in enumerate(acts):
        carrier.extend(f"{i}.{label}" for label in A.carrier)
        action.extend(tuple(b + offset for b in row) for row in A.action)
        offset += A.size
    return FiniteAct(monoid=monoid, carrier=tuple(carrier), action=tuple(action))


def free_act(monoid: FiniteMonoid, k: int) -> FiniteAct:
    """Free act on a basis of size k: k disjoint copies of S."""
    if k < 1:
        raise EmptyAct("A free act needs a non-empty basis")
    return coproduct([regular_act(monoid)] * k)


def principal_right_act(monoid: FiniteMonoid, e: int) -> FiniteAct:
    """The act eS for an idempotent e, carrier ordered by first occurrence of e·s."""
    require_idempotent(monoid, e)
    elements = principal_right_ideal(monoid, e)
    position = {x: i for i, x in enumerate(elements)}
    action = tuple(
        tuple(position[monoid.table[x][s]] for s in range(monoid.size)) for x in elements
    )
    carrier = tuple(monoid.elements[x] for x in elements)
    return FiniteAct(monoid=monoid, carrier=carrier, action=action)


def projective_act(monoid: FiniteMonoid, es: Sequence[int]) -> FiniteAct:
    """Coproduct of the principal acts eS over ``es`` (repetition allowed)."""
    if not es:
        raise EmptyAct("A projective act needs at least one idempotent")
    return coproduct([principal_right_act(monoid, e) for e in es])


def subact(act: FiniteAct, indices: Iterable[int]) -> FiniteAct:
    """Restrict ``act`` to an action-closed set of carrier indices (kept in index order)."""
    chosen = sorted(set(indices))
    if not chosen:
        raise EmptyAct("A subact must be non-empty")
    position = {a: i for i, a in enumerate(chosen)}
    rows = []
    for a in chosen:
        try:
            rows.append(tuple(position[b] for b in act.action[a]))
        except KeyError:
            raise MalformedDocument(
                f"Subset is not closed under the action (at '{act.carrier[a]}')",
                element=act.carrier[a],
            )
    carrier = tuple(act.carrier[a] for a in chosen)
    return FiniteAct(monoid=act.monoid, carrier=carrier, action=tuple(rows))


# --- morphisms --------------------------------------------------------------


def is_morphism(f: ActMorphism) -> bool:
    """True iff f(a·s) = f(a)·s for every a and s."""
    src, tgt = f.source, f.target
    if src.monoid != tgt.monoid:
        raise MonoidMismatch()
    if len(f.map) != src.size or any(not 0 <= b < tgt.size for b in f.map):
        return False
    return all(
        f.map[src.action[a][s]] == tgt.action[f.map[a]][s]
        for a in range(src.size)
        for s in range(src.monoid.size)
    )


def identity_morphism(act: FiniteAct) -> ActMorphism:
    return ActMorphism(source=act, target=act, map=tuple(range(act.size)))


def compose(f: ActMorphism, g: ActMorphism) -> ActMorphism:
    """``g ∘ f``: first f, then g."""
    if f.target != g.source:
        raise MonoidMismatch("Morphisms are not composable")
    return ActMorphism(source=f.source, target=g.target, map=tuple(g.map[b] for b in f.map))


def inverse(f: ActMorphism) -> ActMorphism | None:
    """The inverse map if f is bijective, else None."""
    if f.source.size != f.target.size or len(set(f.map)) != len(f.map):
        return None
    back = [0] * f.target.size
    for a, b in enumerate(f.map):
        back[b] = a
    return ActMorphism(source=f.target, target=f.source, map=tuple(back))


# --- orbits and generation --------------------------------------------------


def orbit(act: FiniteAct, a: int) -> list[int]:
    """aS as sorted carrier indices."""
    return sorted(set(act.action[a]))


def is_cyclic(act: FiniteAct) -> bool:
    """True iff aS = A for some a."""
    return any(len(set(row)) == act.size for row in act.action)


def is_simple(act: FiniteAct) -> bool:
    """True iff A has no proper subact, i.e. aS = A for every a."""
    return all(len(set(row)) == act.size for row in act.action)


def minimal_generating_set(act: FiniteAct) -> list[int]:
    """A smallest generating set: one element from each maximal orbit.

    Since a ∈ aS, orbits are ordered by inclusion and every element lies in a
    maximal one; a generating set must contain a generator of each maximal
    orbit, and one generator per maximal orbit suffices.
    """
    orbits = [frozenset(row) for row in act.action]
    chosen: list[int] = []
    covered: set[frozenset[int]] = set()
    for a, orb in enumerate(orbits):
        if orb in covered:
            continue
        if any(orb < other for other in orbits):
            continue
        covered.add(orb)
        chosen.append(a)
    return chosen
