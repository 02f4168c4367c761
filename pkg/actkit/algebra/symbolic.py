"""Countable acts as formal coproducts of indecomposable types.

A :class:`SymbolicAct` records, for each isomorphism type of indecomposable
act, how many copies occur (a finite number or ω). A *family* stands for
countably many pairwise non-isomorphic types that all occur with the same
multiplicity. Distinct ids always denote non-isomorphic types.

An act in this grammar is cancellable exactly when no type occurs ω times;
the witnesses below make every negative verdict checkable.
"""

from dataclasses import dataclass, field
from functools import total_ordering
from typing import Any, Mapping

from actkit.algebra.act import FiniteAct, principal_right_act
from actkit.algebra.canonical import canonical_labelling
from actkit.algebra.decomposition import iso_signature
from actkit.algebra.monoid import FiniteMonoid, require_idempotent
from actkit.exceptions import EmptyAct, MalformedDocument, TheoremViolation, WitnessError
from actkit.models.documents import SymbolicDocument, parse_document

OMEGA_TOKEN = "omega"
REGULAR_TYPE_ID = "S"


@total_ordering
@dataclass(frozen=True)
class Cardinal:
    """A finite cardinal or ω (``value is None``)."""

    value: int | None

    def __post_init__(self):
        if self.value is not None and self.value < 0:
            raise ValueError("finite cardinals are non-negative")

    @property
    def is_finite(self) -> bool:
        return self.value is not None

    def __add__(self, other: "Cardinal") -> "Cardinal":
        return card_add(self, other)

    def __lt__(self, other: "Cardinal") -> bool:
        if self.value is None:
            return False
        return other.value is None or self.value < other.value

    def to_json(self) -> int | str:
        return OMEGA_TOKEN if self.value is None else self.value

    @classmethod
    def from_json(cls, raw: int | str) -> "Cardinal":
        if raw == OMEGA_TOKEN:
            return OMEGA
        if isinstance(raw, bool) or not isinstance(raw, int):
            raise MalformedDocument(f"Multiplicity must be an integer or 'omega', got {raw!r}")
        if raw < 0:
            raise MalformedDocument(f"Multiplicity must be non-negative, got {raw}")
        return cls(raw)

    def __str__(self) -> str:
        return "ω" if self.value is None else str(self.value)


OMEGA = Cardinal(None)


def card_add(x: Cardinal, y: Cardinal) -> Cardinal:
    if x.value is None or y.value is None:
        return OMEGA
    return Cardinal(x.value + y.value)


def _frozen(items: Mapping[str, Cardinal]) -> tuple[tuple[str, Cardinal], ...]:
    return tuple(sorted(items.items()))


@dataclass(frozen=True)
class SymbolicAct:
    """Sorted ``(id, multiplicity)`` pairs for entries and families."""

    entries: tuple[tuple[str, Cardinal], ...] = ()
    families: tuple[tuple[str, Cardinal], ...] = ()

    def __post_init__(self):
        if not self.entries and not self.families:
            raise EmptyAct("A symbolic act needs at least one entry or family")
        for ident, card in (*self.entries, *self.families):
            if card.value == 0:
                raise MalformedDocument(f"Multiplicity of '{ident}' must be at least 1", id=ident)

    @classmethod
    def of(
        cls,
        entries: Mapping[str, Cardinal | int] | None = None,
        families: Mapping[str, Cardinal | int] | None = None,
    ) -> "SymbolicAct":
        """Convenience constructor accepting ints for finite multiplicities."""

        def lift(items):
            return {
                k: v if isinstance(v, Cardinal) else Cardinal(v) for k, v in (items or {}).items()
            }

        return cls(entries=_frozen(lift(entries)), families=_frozen(lift(families)))

    @property
    def entry_map(self) -> dict[str, Cardinal]:
        return dict(self.entries)

    @property
    def family_map(self) -> dict[str, Cardinal]:
        return dict(self.families)

    def multiplicities(self) -> list[Cardinal]:
        return [card for _, card in (*self.entries, *self.families)]

    def to_document(self) -> dict:
        return {
            "entries": {k: v.to_json() for k, v in self.entries},
            "families": {k: v.to_json() for k, v in self.families},
        }


def load_symbolic(doc: dict | SymbolicDocument) -> SymbolicAct:
    parsed = doc if isinstance(doc, SymbolicDocument) else parse_document(SymbolicDocument, doc)
    return SymbolicAct(
        entries=_frozen({k: Cardinal.from_json(v) for k, v in parsed.entries.items()}),
        families=_frozen({k: Cardinal.from_json(v) for k, v in parsed.families.items()}),
    )


def _merge(left: Mapping[str, Cardinal], right: Mapping[str, Cardinal]) -> dict[str, Cardinal]:
    merged = dict(left)
    for ident, card in right.items():
        merged[ident] = card_add(merged[ident], card) if ident in merged else card
    return merged


def sym_coproduct(a: SymbolicAct, b: SymbolicAct) -> SymbolicAct:
    return SymbolicAct(
        entries=_frozen(_merge(a.entry_map, b.entry_map)),
        families=_frozen(_merge(a.family_map, b.family_map)),
    )


def sym_iso(a: SymbolicAct, b: SymbolicAct) -> bool:
    """Isomorphism by uniqueness of decomposition: same types, same multiplicities."""
    return a.entries == b.entries and a.families == b.families


def signature_P(act: SymbolicAct) -> set[Cardinal]:
    """The set of class cardinalities occurring in ``act``."""
    return set(act.multiplicities())


def is_finitely_decomposable(act: SymbolicAct) -> bool:
    return not act.families and all(card.is_finite for _, card in act.entries)


# --- verdicts ---------------------------------------------------------------

RULE_INDECOMPOSABLE = "indecomposable"
RULE_FINITELY_DECOMPOSABLE = "finitely-decomposable"
RULE_ALL_CLASSES_FINITE = "all-classes-finite"
RULE_INFINITE_CLASS = "infinite-class"


@dataclass(frozen=True)
class ExternalWitness:
    """A ⊔ B ≅ A ⊔ C with B ≇ C."""

    b: SymbolicAct
    c: SymbolicAct

    def check(self, act: SymbolicAct) -> list[str]:
        problems = []
        if not sym_iso(sym_coproduct(act, self.b), sym_coproduct(act, self.c)):
            problems.append("A ⊔ B is not isomorphic to A ⊔ C")
        if sym_iso(self.b, self.c):
            problems.append("B is isomorphic to C")
        return problems

    def to_document(self) -> dict:
        return {"B": self.b.to_document(), "C": self.c.to_document()}


@dataclass(frozen=True)
class InternalWitness:
    """A = C ⊔ D = E ⊔ F with D ≅ F but C ≇ E."""

    c: SymbolicAct
    d: SymbolicAct
    e: SymbolicAct
    f: SymbolicAct

    def check(self, act: SymbolicAct) -> list[str]:
        problems = []
        if not sym_iso(sym_coproduct(self.c, self.d), act):
            problems.append("C ⊔ D does not rebuild A")
        if not sym_iso(sym_coproduct(self.e, self.f), act):
            problems.append("E ⊔ F does not rebuild A")
        if not sym_iso(self.d, self.f):
            problems.append("D is not isomorphic to F")
        if sym_iso(self.c, self.e):
            problems.append("C is isomorphic to E")
        return problems

    def to_document(self) -> dict:
        return {
            "C": self.c.to_document(),
            "D": self.d.to_document(),
            "E": self.e.to_document(),
            "F": self.f.to_document(),
        }


@dataclass(frozen=True)
class CancellationVerdict:
    cancellable: bool
    rule: str
    witness: ExternalWitness | InternalWitness | None = field(default=None)

    def verify(self, act: SymbolicAct) -> None:
        """Re-check the witness against ``act``; raise WitnessError if it fails."""
        if self.cancellable:
            if self.witness is not None:
                raise WitnessError("A cancellable verdict carries no witness")
            return
        if self.witness is None:
            raise WitnessError("A negative verdict needs a witness")
        problems = self.witness.check(act)
        if problems:
            raise WitnessError("Witness does not verify: " + "; ".join(problems), problems=problems)

    def to_document(self) -> dict[str, Any]:
        return {
            "cancellable": self.cancellable,
            "rule": self.rule,
            "witness": None if self.witness is None else self.witness.to_document(),
        }


def _positive_rule(act: SymbolicAct) -> str:
    if not act.families and len(act.entries) == 1 and act.entries[0][1] == Cardinal(1):
        return RULE_INDECOMPOSABLE
    if is_finitely_decomposable(act):
        return RULE_FINITELY_DECOMPOSABLE
    return RULE_ALL_CLASSES_FINITE


def _infinite_class(act: SymbolicAct) -> tuple[str, str] | None:
    """``("entry" | "family", id)`` for the smallest id with multiplicity ω.

    Entries are searched before families.
    """
    for kind, items in (("entry", act.entries), ("family", act.families)):
        for ident, card in items:
            if not card.is_finite:
                return kind, ident
    return None


def _absorbing_summand(act: SymbolicAct) -> tuple[str, str] | None:
    """First summand, entries before families, that absorbs one more copy of itself."""
    one = Cardinal(1)
    for kind, items in (("entry", act.entry_map), ("family", act.family_map)):
        for ident in sorted(items):
            if items[ident] + one == items[ident]:
                return kind, ident
    return None


def _copies(kind: str, ident: str, k: int) -> SymbolicAct:
    if kind == "entry":
        return SymbolicAct.of(entries={ident: k})
    return SymbolicAct.of(families={ident: k})


def decide_cancellable(act: SymbolicAct) -> CancellationVerdict:
    """Cancellable iff every class is finite.

    Every act here has finitely many distinct class sizes, so this is the
    complete answer; a type with ω copies absorbs one more copy, which gives
    the witness B = one copy, C = two copies.
    """
    infinite = _infinite_class(act)
    if infinite is None:
        verdict = CancellationVerdict(cancellable=True, rule=_positive_rule(act))
    else:
        kind, ident = infinite
        witness = ExternalWitness(b=_copies(kind, ident, 1), c=_copies(kind, ident, 2))
        verdict = CancellationVerdict(cancellable=False, rule=RULE_INFINITE_CLASS, witness=witness)
    verdict.verify(act)
    return verdict


def decide_internally_cancellable(act: SymbolicAct) -> CancellationVerdict:
    """Internal cancellation coincides with cancellation.

    For a type with ω copies, A = (one copy) ⊔ A = (two copies) ⊔ A.
    """
    infinite = _absorbing_summand(act)
    if infinite is None:
        verdict = CancellationVerdict(cancellable=True, rule=_positive_rule(act))
    else:
        kind, ident = infinite
        witness = InternalWitness(
            c=_copies(kind, ident, 1), d=act, e=_copies(kind, ident, 2), f=act
        )
        verdict = CancellationVerdict(cancellable=False, rule=RULE_INFINITE_CLASS, witness=witness)
    verdict.verify(act)
    return verdict


def theorem_eq_predicate(act: SymbolicAct) -> bool | None:
    """With finitely many classes, cancellable iff finitely decomposable.

    Returns None when a family is present (infinitely many classes).
    """
    if act.families:
        return None
    cancellable = decide_cancellable(act).cancellable
    if cancellable != is_finitely_decomposable(act):
        raise TheoremViolation(
            "Cancellability disagrees with finite decomposability", act=act.to_document()
        )
    return cancellable


# --- builders ---------------------------------------------------------------


def free_act_symbolic(basis: Cardinal, type_id: str = REGULAR_TYPE_ID) -> SymbolicAct:
    """Free act on a basis of the given size: one type (S) with that multiplicity."""
    if basis.value == 0:
        raise EmptyAct("A free act needs a non-empty basis")
    return SymbolicAct(entries=((type_id, basis),))


def infinite_copies(type_id: str) -> SymbolicAct:
    """ω copies of a single indecomposable act."""
    return SymbolicAct(entries=((type_id, OMEGA),))


def alternating_copies(b: str, c: str) -> SymbolicAct:
    """C ⊔ B ⊔ C ⊔ ... for non-isomorphic B and C: ω copies of each."""
    if b == c:
        raise MalformedDocument("The alternating coproduct needs two distinct types")
    return SymbolicAct.of(entries={b: OMEGA, c: OMEGA})


def symbolize(act: FiniteAct) -> SymbolicAct:
    """Entries keyed by canonical component forms; never any families."""
    return SymbolicAct(
        entries=_frozen({form.key: Cardinal(count) for form, count in iso_signature(act)})
    )


def projective_act_symbolic(
    monoid: FiniteMonoid, multiplicities: Mapping[int, Cardinal]
) -> SymbolicAct:
    """The coproduct of ``k`` copies of eS for each idempotent ``e -> k``.

    Each eS is cyclic, hence indecomposable, and its canonical form is its
    type id, so idempotents with isomorphic eS land on the same entry.
    """
    entries: dict[str, Cardinal] = {}
    for e, card in multiplicities.items():
        require_idempotent(monoid, e)
        if card.value == 0:
            continue
        form, _ = canonical_labelling(principal_right_act(monoid, e))
        entries[form.key] = card_add(entries[form.key], card) if form.key in entries else card
    return SymbolicAct(entries=_frozen(entries))
