"""Finite monoids given by multiplication tables.

Elements are dense indices; labels are only used at the document boundary.
The builtin full transformation monoids compose left to right: ``s·t`` means
"apply s, then t", so that right acts satisfy ``a·(st) = (a·s)·t``.
"""

import re
from dataclasses import dataclass, field
from itertools import product

from actkit.exceptions import (
    MalformedDocument,
    MissingIdentity,
    NonAssociative,
    NotIdempotent,
    UnknownLabel,
    UnsupportedParams,
)
from actkit.models.documents import MonoidDocument, parse_document

Table = tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class FiniteMonoid:
    """A finite monoid: labels, the identity index and ``table[s][t] = s·t``."""

    elements: tuple[str, ...]
    identity: int
    table: Table
    name: str = field(default="custom", compare=False)

    @property
    def size(self) -> int:
        return len(self.elements)

    def mul(self, s: int, t: int) -> int:
        return self.table[s][t]

    def index(self, label: str) -> int:
        try:
            return self.elements.index(label)
        except ValueError:
            raise UnknownLabel(label, "monoid")

    def to_document(self) -> dict:
        return {
            "elements": list(self.elements),
            "identity": self.elements[self.identity],
            "table": [[self.elements[x] for x in row] for row in self.table],
        }


def find_associativity_violation(table: Table) -> tuple[int, int, int] | None:
    """Return the first triple (s, t, u) with (st)u != s(tu), or None."""
    n = len(table)
    for s, t in product(range(n), repeat=2):
        st = table[s][t]
        row_st = table[st]
        for u in range(n):
            if row_st[u] != table[s][table[t][u]]:
                return s, t, u
    return None


def _check_monoid(elements: tuple[str, ...], identity: int, table: Table) -> None:
    n = len(elements)
    for x in range(n):
        if table[identity][x] != x or table[x][identity] != x:
            raise MissingIdentity(
                f"'{elements[identity]}' is not a two-sided identity "
                f"(fails against '{elements[x]}')",
                identity=elements[identity],
                witness=elements[x],
            )
    violation = find_associativity_violation(table)
    if violation is not None:
        s, t, u = violation
        raise NonAssociative(elements[s], elements[t], elements[u])


def load_monoid(doc: dict | MonoidDocument, name: str = "custom") -> FiniteMonoid:
    """Build a validated FiniteMonoid from a monoid document."""
    parsed = doc if isinstance(doc, MonoidDocument) else parse_document(MonoidDocument, doc)
    elements = tuple(parsed.elements)
    n = len(elements)
    index = {label: i for i, label in enumerate(elements)}

    if parsed.identity not in index:
        raise UnknownLabel(parsed.identity, "identity")
    if len(parsed.table) != n or any(len(row) != n for row in parsed.table):
        raise MalformedDocument(f"Monoid table must be {n}x{n}", expected=n)

    rows = []
    for row in parsed.table:
        try:
            rows.append(tuple(index[label] for label in row))
        except KeyError as e:
            raise UnknownLabel(e.args[0], "monoid table")
    table = tuple(rows)
    identity = index[parsed.identity]

    _check_monoid(elements, identity, table)
    return FiniteMonoid(elements=elements, identity=identity, table=table, name=name)


# --- builtin fixtures -------------------------------------------------------

MAX_TRANSFORMATION_DEGREE = 3

BUILTINS = ("trivial", "cyclic_group", "full_transformation")

_BUILTIN_RE = re.compile(r"^(?P<name>[a-z_]+)(?:\((?P<param>\d+)\))?$")


def _trivial() -> FiniteMonoid:
    return FiniteMonoid(elements=("1",), identity=0, table=((0,),), name="trivial")


def _cyclic_group(n: int) -> FiniteMonoid:
    labels = tuple("1" if k == 0 else "g" if k == 1 else f"g^{k}" for k in range(n))
    table = tuple(tuple((i + j) % n for j in range(n)) for i in range(n))
    return FiniteMonoid(elements=labels, identity=0, table=table, name=f"cyclic_group({n})")


def _full_transformation(n: int) -> FiniteMonoid:
    maps = list(product(range(n), repeat=n))
    position = {m: i for i, m in enumerate(maps)}
    labels = tuple("".join(str(x) for x in m) for m in maps)
    # s·t = apply s, then t
    table = tuple(
        tuple(position[tuple(t[s[x]] for x in range(n))] for t in maps) for s in maps
    )
    identity = position[tuple(range(n))]
    return FiniteMonoid(
        elements=labels, identity=identity, table=table, name=f"full_transformation({n})"
    )


def builtin_monoid(name: str, param: int | None = None) -> FiniteMonoid:
    """Return one of the standard fixture monoids.

    Full transformation monoids label each map by its image string, so in
    ``full_transformation(2)`` the identity is ``"01"``, the swap ``"10"`` and
    the constants ``"00"`` and ``"11"``.
    """
    if name == "trivial":
        if param not in (None, 1):
            raise UnsupportedParams("trivial takes no parameter", name=name, param=param)
        return _trivial()
    if name == "cyclic_group":
        if param is None or param < 1:
            raise UnsupportedParams("cyclic_group(n) needs n >= 1", name=name, param=param)
        return _cyclic_group(param)
    if name == "full_transformation":
        if param is None or not 1 <= param <= MAX_TRANSFORMATION_DEGREE:
            raise UnsupportedParams(
                f"full_transformation(n) needs 1 <= n <= {MAX_TRANSFORMATION_DEGREE}",
                name=name,
                param=param,
            )
        return _full_transformation(param)
    raise UnsupportedParams(f"Unknown builtin monoid '{name}'", name=name, known=list(BUILTINS))


def parse_builtin(ref: str) -> FiniteMonoid:
    """Resolve a builtin reference such as ``cyclic_group(2)`` (with or without ``builtin:``)."""
    text = ref.removeprefix("builtin:").strip()
    match = _BUILTIN_RE.match(text)
    if not match:
        raise UnsupportedParams(f"Cannot parse builtin monoid '{ref}'", ref=ref)
    param = match.group("param")
    return builtin_monoid(match.group("name"), int(param) if param is not None else None)


# --- idempotents -------------------------------------------------------------


def idempotents(monoid: FiniteMonoid) -> list[int]:
    """Indices e with e·e = e, ascending. Always contains the identity."""
    return [e for e in range(monoid.size) if monoid.table[e][e] == e]


def require_idempotent(monoid: FiniteMonoid, e: int) -> None:
    if not 0 <= e < monoid.size:
        raise UnknownLabel(str(e), "monoid")
    if monoid.table[e][e] != e:
        raise NotIdempotent(monoid.elements[e])


def principal_right_ideal(monoid: FiniteMonoid, e: int) -> list[int]:
    """The elements of eS, deduplicated in order of first occurrence."""
    seen: dict[int, None] = {}
    for s in range(monoid.size):
        seen.setdefault(monoid.table[e][s], None)
    return list(seen)


def monoid_generators(monoid: FiniteMonoid) -> list[int]:
    """A generating set for M as a monoid, chosen greedily in index order.

    An element is added when it is not yet a product of earlier generators.
    """
    generators: list[int] = []
    reached = {monoid.identity}
    for x in range(monoid.size):
        if x in reached:
            continue
        generators.append(x)
        frontier = list(reached)
        while frontier:
            nxt = []
            for s in frontier:
                for g in generators:
                    y = monoid.table[s][g]
                    if y not in reached:
                        reached.add(y)
                        nxt.append(y)
            frontier = nxt
    return generators
