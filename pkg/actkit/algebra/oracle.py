"""Exhaustive enumeration of small acts and the theorem-verification suites.

Acts of a given size are generated from the action of a monoid generating
set: each generator gets a transformation of the carrier, the action of every
other element is propagated along the right Cayley graph, and a choice is kept
only if the propagation is consistent. Consistency on every Cayley edge is
exactly the compatibility axiom, and the identity acts trivially by
construction, so no full axiom scan is needed.
"""

import random
import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from functools import partial
from itertools import combinations_with_replacement, permutations, product
from typing import Callable, Iterator, Sequence

from actkit.algebra.act import ActionTable, FiniteAct, coproduct, find_axiom_violation, subact
from actkit.algebra.decomposition import (
    DEFAULT_SPLIT_BOUND,
    check_decomposition,
    component_forms,
    decompose,
    iso_signature,
)
from actkit.algebra.isomorphism import are_isomorphic, canonical_act
from actkit.algebra.monoid import FiniteMonoid, monoid_generators
from actkit.algebra.symbolic import (
    OMEGA,
    Cardinal,
    SymbolicAct,
    alternating_copies,
    decide_cancellable,
    decide_internally_cancellable,
    free_act_symbolic,
    infinite_copies,
    sym_coproduct,
    sym_iso,
    theorem_eq_predicate,
)
from actkit.exceptions import BudgetExceeded, TheoremViolation, WitnessError
from actkit.models.report import SuiteReport

DEFAULT_ENUMERATION_BUDGET = 10**7
DEFAULT_TRIPLE_BUDGET = 10**6

SUITES = ("decomposition", "cancellation", "internal", "symbolic")


# --- enumeration ------------------------------------------------------------


def candidate_count(monoid: FiniteMonoid, sizes: Sequence[int]) -> int:
    """Number of generator assignments the enumerator will try."""
    k = len(monoid_generators(monoid))
    return sum((m**m) ** k for m in sizes)


def _action_tables(monoid: FiniteMonoid, m: int) -> Iterator[ActionTable]:
    generators = monoid_generators(monoid)
    table, one, n = monoid.table, monoid.identity, monoid.size
    transformations = list(product(range(m), repeat=m))

    for choice in product(transformations, repeat=len(generators)):
        maps: dict[int, tuple[int, ...]] = {one: tuple(range(m))}
        queue = [one]
        consistent = True
        for s in queue:
            for g, image in zip(generators, choice):
                t = table[s][g]
                # a·(sg) = (a·s)·g
                f = tuple(image[x] for x in maps[s])
                if t not in maps:
                    maps[t] = f
                    queue.append(t)
                elif maps[t] != f:
                    consistent = False
                    break
            if not consistent:
                break
        if consistent:
            yield tuple(tuple(maps[s][a] for s in range(n)) for a in range(m))


def enumerate_acts(
    monoid: FiniteMonoid,
    max_size: int,
    budget: int = DEFAULT_ENUMERATION_BUDGET,
    exact: bool = False,
) -> list[FiniteAct]:
    """One canonical representative per isomorphism class of acts of size <= max_size.

    With ``exact`` only acts of size exactly ``max_size`` are returned.
    Representatives are sorted by size, then by canonical table.
    """
    if max_size < 1:
        raise ValueError("max_size must be at least 1")
    sizes = [max_size] if exact else list(range(1, max_size + 1))
    needed = candidate_count(monoid, sizes)
    if needed > budget:
        raise BudgetExceeded("act enumeration", needed, budget)

    found: dict[ActionTable, FiniteAct] = {}
    for m in sizes:
        carrier = tuple(str(i) for i in range(m))
        for action in _action_tables(monoid, m):
            rep = canonical_act(FiniteAct(monoid=monoid, carrier=carrier, action=action))
            found.setdefault(rep.action, rep)
    return sorted(found.values(), key=lambda act: (act.size, act.action))


def permutation_quotient_count(
    monoid: FiniteMonoid, m: int, budget: int = DEFAULT_ENUMERATION_BUDGET
) -> int:
    """Count acts of size m up to isomorphism by brute force.

    Every m-by-|M| table is tested against both axioms and reduced to its
    smallest relabelling; shares no code with :func:`enumerate_acts`.
    """
    n = monoid.size
    needed = m ** (m * n)
    if needed > budget:
        raise BudgetExceeded("permutation-quotient brute force", needed, budget)
    relabellings = list(permutations(range(m)))
    classes = set()
    for flat in product(range(m), repeat=m * n):
        action = tuple(flat[a * n : (a + 1) * n] for a in range(m))
        if find_axiom_violation(monoid, action) is not None:
            continue
        smallest = None
        for p in relabellings:
            back = [0] * m
            for a, pa in enumerate(p):
                back[pa] = a
            relabelled = tuple(tuple(p[b] for b in action[back[x]]) for x in range(m))
            if smallest is None or relabelled < smallest:
                smallest = relabelled
        classes.add(smallest)
    return len(classes)


def brute_force_isomorphic(source: FiniteAct, target: FiniteAct) -> bool:
    """Try every bijection of carriers."""
    if source.size != target.size:
        return False
    n = source.monoid.size
    for p in permutations(range(target.size)):
        if all(
            p[source.action[a][s]] == target.action[p[a]][s]
            for a in range(source.size)
            for s in range(n)
        ):
            return True
    return False


# --- suite plumbing ---------------------------------------------------------

ChunkResult = tuple[int, list[str], Counter]


def _run_chunks(
    worker: Callable[[Sequence[int]], ChunkResult], total: int, workers: int
) -> tuple[int, list[str], Counter]:
    """Split ``range(total)`` into contiguous chunks and merge results in chunk order."""
    if total == 0:
        return 0, [], Counter()
    n_chunks = max(1, min(workers, total))
    size = -(-total // n_chunks)
    chunks = [list(range(i, min(i + size, total))) for i in range(0, total, size)]
    if workers <= 1:
        results = [worker(chunk) for chunk in chunks]
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(worker, chunks))
    instances, violations, counters = 0, [], Counter()
    for count, found, counter in results:
        instances += count
        violations.extend(found)
        counters.update(counter)
    return instances, violations, counters


def _label(index: int, act: FiniteAct) -> str:
    return f"act #{index} (size {act.size})"


# --- decomposition suite ----------------------------------------------------


def _decomposition_chunk(
    acts: Sequence[FiniteAct], bound: int, chunk: Sequence[int]
) -> ChunkResult:
    violations: list[str] = []
    counter: Counter = Counter()
    for i in chunk:
        act = acts[i]
        decomposition = decompose(act)
        counter["components"] += len(decomposition)
        found = check_decomposition(decomposition, bound)
        if not found and not are_isomorphic(decomposition.reassemble(), act):
            found.append("reassembled components are not isomorphic to the act")
        violations.extend(f"{_label(i, act)}: {v}" for v in found)
    return len(chunk), violations, counter


def verify_unique_decomposition(
    monoid: FiniteMonoid,
    max_size: int,
    budget: int = DEFAULT_ENUMERATION_BUDGET,
    bound: int = DEFAULT_SPLIT_BOUND,
    workers: int = 1,
) -> SuiteReport:
    """Decompose every enumerated act and certify the result by brute force."""
    started = time.perf_counter()
    acts = enumerate_acts(monoid, max_size, budget)
    worker = partial(_decomposition_chunk, acts, bound)
    instances, violations, counter = _run_chunks(worker, len(acts), workers)
    return SuiteReport(
        suite="decomposition",
        monoid=monoid.name,
        max_size=max_size,
        instances=instances,
        violations=violations,
        details={"components": counter["components"]},
        wall_time=time.perf_counter() - started,
    )


# --- finite cancellation suite ----------------------------------------------


def _cancellation_chunk(
    acts: Sequence[FiniteAct], signatures: list, chunk: Sequence[int]
) -> ChunkResult:
    violations: list[str] = []
    counter: Counter = Counter()
    checked = 0
    for i in chunk:
        a = acts[i]
        for j, k in combinations_with_replacement(range(len(acts)), 2):
            b, c = acts[j], acts[k]
            checked += 1
            explicit = are_isomorphic(coproduct([a, b]), coproduct([a, c]))
            by_signature = signatures[i] + signatures[j] == signatures[i] + signatures[k]
            where = f"A=#{i}, B=#{j}, C=#{k}"
            if explicit != by_signature:
                violations.append(f"{where}: signature method disagrees with isomorphism search")
            if explicit:
                if not are_isomorphic(b, c):
                    violations.append(f"{where}: A⊔B ≅ A⊔C but B ≇ C")
                if not are_isomorphic(b, a):
                    counter["matched"] += 1
    return checked, violations, counter


def verify_finite_cancellation(
    monoid: FiniteMonoid,
    max_size: int,
    budget: int = DEFAULT_ENUMERATION_BUDGET,
    triple_budget: int = DEFAULT_TRIPLE_BUDGET,
    workers: int = 1,
) -> SuiteReport:
    """A⊔B ≅ A⊔C ⇒ B ≅ C over all triples with B, C unordered."""
    started = time.perf_counter()
    acts = enumerate_acts(monoid, max_size, budget)
    u = len(acts)
    triples = u * u * (u + 1) // 2
    if triples > triple_budget:
        raise BudgetExceeded("cancellation triples", triples, triple_budget)
    signatures = [iso_signature(act) for act in acts]
    worker = partial(_cancellation_chunk, acts, signatures)
    instances, violations, counter = _run_chunks(worker, u, workers)
    if counter["matched"] == 0:
        violations.append("vacuous: no triple with A⊔B ≅ A⊔C and B ≇ A")
    return SuiteReport(
        suite="cancellation",
        monoid=monoid.name,
        max_size=max_size,
        instances=instances,
        violations=violations,
        details={"acts": u, "matched_triples": counter["matched"]},
        wall_time=time.perf_counter() - started,
    )


# --- internal cancellation suite --------------------------------------------


def _internal_chunk(acts: Sequence[FiniteAct], chunk: Sequence[int]) -> ChunkResult:
    violations: list[str] = []
    counter: Counter = Counter()
    for i in chunk:
        act = acts[i]
        decomposition = decompose(act)
        blocks = decomposition.components
        forms = [form for form, _ in component_forms(decomposition)]
        k = len(blocks)
        masks = range(1, (1 << k) - 1)

        def part(mask: int, keep: bool) -> list[int]:
            return [a for j, block in enumerate(blocks) if (mask >> j & 1) == keep for a in block]

        def forms_of(mask: int) -> Counter:
            return Counter(forms[j] for j in range(k) if mask >> j & 1)

        for x, y in product(masks, repeat=2):
            counter["pairs"] += 1
            if forms_of(x) != forms_of(y):
                continue
            counter["matched"] += 1
            d, f = subact(act, part(x, False)), subact(act, part(y, False))
            if not are_isomorphic(d, f):
                violations.append(f"{_label(i, act)}: C ≅ E but D ≇ F (masks {x}, {y})")
    return len(chunk), violations, counter


def verify_internal_cancellation(
    monoid: FiniteMonoid,
    max_size: int,
    budget: int = DEFAULT_ENUMERATION_BUDGET,
    workers: int = 1,
) -> SuiteReport:
    """A = C⊔D = E⊔F (unions of components) with C ≅ E forces D ≅ F."""
    started = time.perf_counter()
    acts = enumerate_acts(monoid, max_size, budget)
    worker = partial(_internal_chunk, acts)
    instances, violations, counter = _run_chunks(worker, len(acts), workers)
    return SuiteReport(
        suite="internal",
        monoid=monoid.name,
        max_size=max_size,
        instances=instances,
        violations=violations,
        details={"pairs_checked": counter["pairs"], "matched_pairs": counter["matched"]},
        wall_time=time.perf_counter() - started,
    )


# --- symbolic suite ---------------------------------------------------------

TYPE_POOL = ("a", "b", "c", "d", "e")
FAMILY_POOL = ("F", "G", "H")
MULTIPLICITIES = (Cardinal(1), Cardinal(2), Cardinal(3), Cardinal(4), Cardinal(5), OMEGA)


def random_symbolic(rng: random.Random) -> SymbolicAct:
    """A random act: up to 3 entries, 0-2 families, multiplicities in {1..5, ω}."""
    n_entries = rng.randint(0, 3)
    n_families = rng.randint(0, 2)
    if n_entries + n_families == 0:
        n_entries = 1
    entries = {t: rng.choice(MULTIPLICITIES) for t in rng.sample(TYPE_POOL, n_entries)}
    families = {f: rng.choice(MULTIPLICITIES) for f in rng.sample(FAMILY_POOL, n_families)}
    return SymbolicAct.of(entries=entries, families=families)


def _regressions() -> list[tuple[str, bool]]:
    """Fixed cases: (description, holds)."""
    t = infinite_copies("t")
    one_t = SymbolicAct.of(entries={"t": 1})
    two_t = SymbolicAct.of(entries={"t": 2})
    bc = alternating_copies("b", "c")
    only_b = SymbolicAct.of(entries={"b": 1})
    only_c = SymbolicAct.of(entries={"c": 1})
    family = SymbolicAct.of(families={"F": 1})
    verdict_t = decide_cancellable(t)
    internal_s = decide_internally_cancellable(infinite_copies("s"))
    cases = [
        ("infinite copies of one type are not cancellable", not verdict_t.cancellable),
        (
            "infinite copies witness is B = one copy, C = two copies",
            verdict_t.witness is not None
            and sym_iso(verdict_t.witness.b, one_t)
            and sym_iso(verdict_t.witness.c, two_t),
        ),
        (
            "B ⊔ A ≅ B ⊔ (A ⊔ A) but A ⊔ A ≇ A",
            sym_iso(sym_coproduct(t, one_t), sym_coproduct(t, two_t))
            and not sym_iso(sym_coproduct(one_t, one_t), one_t),
        ),
        ("alternating coproduct is not cancellable", not decide_cancellable(bc).cancellable),
        (
            "alternating coproduct absorbs either summand",
            sym_iso(sym_coproduct(bc, only_b), sym_coproduct(bc, only_c))
            and not sym_iso(only_b, only_c),
        ),
        ("a single indecomposable is cancellable", decide_cancellable(one_t).cancellable),
        ("a family of distinct types is cancellable", decide_cancellable(family).cancellable),
        (
            "internal witness for infinite copies rebuilds the act",
            not internal_s.cancellable and internal_s.witness is not None,
        ),
        ("finite decomposability decides without families", theorem_eq_predicate(
            SymbolicAct.of(entries={"a": 2, "b": 7})
        ) is True and theorem_eq_predicate(SymbolicAct.of(entries={"a": OMEGA})) is False),
        ("families fall outside the finite-classes rule", theorem_eq_predicate(family) is None),
    ]
    for k in range(1, 6):
        cases.append(
            (
                f"free act on {k} generators is cancellable",
                decide_cancellable(free_act_symbolic(Cardinal(k))).cancellable,
            )
        )
    cases.append(
        (
            "free act on ω generators is not cancellable",
            not decide_cancellable(free_act_symbolic(OMEGA)).cancellable,
        )
    )
    return cases


def _symbolic_trial(a: SymbolicAct, b: SymbolicAct) -> list[str]:
    problems = []
    try:
        va, vb = decide_cancellable(a), decide_cancellable(b)
        vab = decide_cancellable(sym_coproduct(a, b))
        if vab.cancellable != (va.cancellable and vb.cancellable):
            problems.append("coproduct verdict is not the conjunction of the summands' verdicts")
        internal = decide_internally_cancellable(a)
        if internal.cancellable != va.cancellable:
            problems.append("internal and external verdicts differ")
        for verdict in (va, internal):
            verdict.verify(a)
        theorem_eq_predicate(a)
    except (WitnessError, TheoremViolation) as e:
        problems.append(e.message)
    return problems


def verify_symbolic_theorems(seed: int = 0, trials: int = 1000) -> SuiteReport:
    """Seeded random checks of the symbolic deciders plus fixed regressions."""
    started = time.perf_counter()
    rng = random.Random(seed)
    violations = []
    negatives = 0
    for trial in range(trials):
        a, b = random_symbolic(rng), random_symbolic(rng)
        if not decide_cancellable(a).cancellable:
            negatives += 1
        violations.extend(
            f"trial {trial} {a.to_document()}: {problem}" for problem in _symbolic_trial(a, b)
        )
    regressions = _regressions()
    violations.extend(f"regression failed: {name}" for name, holds in regressions if not holds)
    return SuiteReport(
        suite="symbolic",
        monoid="symbolic",
        instances=trials + len(regressions),
        violations=violations,
        details={"seed": seed, "trials": trials, "not_cancellable": negatives},
        wall_time=time.perf_counter() - started,
    )
