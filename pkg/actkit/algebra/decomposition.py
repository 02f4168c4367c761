"""Unique decomposition of a finite act into indecomposable subacts.

Two elements lie in the same component iff they are joined by a zig-zag of
action steps a -> a·s, so components are the connected components of the
action graph taken as undirected.
"""

from collections import Counter
from dataclasses import dataclass
from functools import cached_property
from typing import Iterator

from actkit.algebra.act import FiniteAct, coproduct, subact
from actkit.algebra.canonical import ComponentForm, canonical_labelling
from actkit.algebra.union_find import UnionFind
from actkit.exceptions import SizeBoundExceeded

DEFAULT_SPLIT_BOUND = 12


@dataclass(frozen=True)
class Decomposition:
    act: FiniteAct
    components: tuple[tuple[int, ...], ...]

    def __len__(self) -> int:
        return len(self.components)

    def component_acts(self) -> list[FiniteAct]:
        return [subact(self.act, block) for block in self.components]

    def reassemble(self) -> FiniteAct:
        return coproduct(self.component_acts())


def decompose(act: FiniteAct) -> Decomposition:
    """Components ordered by their smallest carrier index, each ascending."""
    uf = UnionFind(act.size)
    for a, row in enumerate(act.action):
        for b in row:
            uf.union(a, b)
    return Decomposition(act=act, components=tuple(tuple(block) for block in uf.groups()))


def is_indecomposable(act: FiniteAct) -> bool:
    return len(decompose(act)) == 1


def _closed(act: FiniteAct, mask: int) -> bool:
    for a, row in enumerate(act.action):
        if mask >> a & 1:
            for b in row:
                if not mask >> b & 1:
                    return False
    return True


def brute_force_split(
    act: FiniteAct, bound: int = DEFAULT_SPLIT_BOUND
) -> tuple[tuple[int, ...], tuple[int, ...]] | None:
    """Search all subsets for a split into two disjoint non-empty subacts.

    Independent of :func:`decompose`; used as its oracle. Subsets containing
    index 0 are tried in increasing bitmask order, so the witness is
    deterministic.
    """
    m = act.size
    if m > bound:
        raise SizeBoundExceeded(m, bound)
    full = (1 << m) - 1
    for rest in range(1 << (m - 1)):
        mask = 1 | rest << 1
        if mask == full:
            continue
        if _closed(act, mask) and _closed(act, full ^ mask):
            left = tuple(a for a in range(m) if mask >> a & 1)
            right = tuple(a for a in range(m) if not mask >> a & 1)
            return left, right
    return None


def check_decomposition(
    decomposition: Decomposition, bound: int = DEFAULT_SPLIT_BOUND
) -> list[str]:
    """Violations of the partition, closure and indecomposability invariants."""
    act = decomposition.act
    violations = []
    seen: Counter[int] = Counter(a for block in decomposition.components for a in block)
    if any(count > 1 for count in seen.values()):
        violations.append("components overlap")
    if set(seen) != set(range(act.size)):
        violations.append("components do not cover the carrier")
    for i, block in enumerate(decomposition.components):
        members = set(block)
        if not members:
            violations.append(f"component {i} is empty")
            continue
        if any(b not in members for a in block for b in act.action[a]):
            violations.append(f"component {i} is not closed under the action")
            continue
        if brute_force_split(subact(act, block), bound) is not None:
            violations.append(f"component {i} splits into two subacts")
    return violations


@dataclass(frozen=True)
class IsoSignature:
    """Multiset of canonical component forms."""

    counts: tuple[tuple[ComponentForm, int], ...]

    @classmethod
    def from_counter(cls, counter: Counter[ComponentForm]) -> "IsoSignature":
        return cls(counts=tuple(sorted(counter.items())))

    @cached_property
    def counter(self) -> Counter[ComponentForm]:
        return Counter(dict(self.counts))

    def __add__(self, other: "IsoSignature") -> "IsoSignature":
        return IsoSignature.from_counter(self.counter + other.counter)

    def __iter__(self) -> Iterator[tuple[ComponentForm, int]]:
        return iter(self.counts)

    def __len__(self) -> int:
        return len(self.counts)

    def to_document(self, monoid_document: dict) -> list[dict]:
        return [
            {"form": form.to_document(monoid_document), "multiplicity": count}
            for form, count in self.counts
        ]


def component_forms(decomposition: Decomposition) -> list[tuple[ComponentForm, tuple[int, ...]]]:
    """Canonical form and labelling of each component, in component order."""
    return [canonical_labelling(part) for part in decomposition.component_acts()]


def iso_signature(act: FiniteAct) -> IsoSignature:
    forms = Counter(form for form, _ in component_forms(decompose(act)))
    return IsoSignature.from_counter(forms)
