"""Shared test fixtures and utilities."""

import json
from itertools import product

import pytest
from click.testing import CliRunner

from actkit.algebra.act import FiniteAct, act_from_table, find_axiom_violation
from actkit.algebra.monoid import builtin_monoid
from actkit.utils.output import set_pretty, set_quiet


@pytest.fixture
def runner():
    """Click CLI test runner.

    Example:
        def test_command(runner):
            result = runner.invoke(main, ["decompose", "act.json"])
            assert result.exit_code == 0
    """
    return CliRunner()


@pytest.fixture(autouse=True)
def reset_output_state():
    """Restore compact, non-quiet output after each test."""
    yield
    set_pretty(False)
    set_quiet(False)


@pytest.fixture
def trivial():
    return builtin_monoid("trivial")


@pytest.fixture
def z2():
    """Cyclic group of order 2: elements "1" and "g"."""
    return builtin_monoid("cyclic_group", 2)


@pytest.fixture
def z3():
    return builtin_monoid("cyclic_group", 3)


@pytest.fixture
def t2():
    """Full transformation monoid on {0, 1}: "00", "01" (identity), "10", "11"."""
    return builtin_monoid("full_transformation", 2)


# Data factory functions for common test acts


def swap_act(monoid, labels=("x", "y")) -> FiniteAct:
    """Two points exchanged by the generator of Z2."""
    return act_from_table(monoid, labels, [[0, 1], [1, 0]])


def fixed_act(monoid, label="p") -> FiniteAct:
    """A single point fixed by every element."""
    return act_from_table(monoid, [label], [[0] * monoid.size])


def z2_act_document(elements, action, monoid="builtin:cyclic_group(2)") -> dict:
    return {"monoid": monoid, "elements": elements, "action": action}


def write_json(path, data) -> str:
    """Write ``data`` as JSON to ``path`` and return the path as a string."""
    path.write_text(json.dumps(data))
    return str(path)


def relabel(act: FiniteAct, p) -> FiniteAct:
    """The act with carrier index a renamed to p[a]."""
    back = [0] * act.size
    for a, pa in enumerate(p):
        back[pa] = a
    action = tuple(tuple(p[b] for b in act.action[back[x]]) for x in range(act.size))
    carrier = tuple(act.carrier[back[x]] for x in range(act.size))
    return FiniteAct(monoid=act.monoid, carrier=carrier, action=action)


def raw_acts(monoid, max_size) -> list[FiniteAct]:
    """Every axiom-satisfying action table with carrier size ≤ max_size, relabellings included."""
    one = monoid.identity
    others = [s for s in range(monoid.size) if s != one]
    acts = []
    for m in range(1, max_size + 1):
        carrier = tuple(str(a) for a in range(m))
        for columns in product(product(range(m), repeat=m), repeat=len(others)):
            column = dict(zip(others, columns))
            column[one] = tuple(range(m))
            action = tuple(tuple(column[s][a] for s in range(monoid.size)) for a in range(m))
            if find_axiom_violation(monoid, action) is None:
                acts.append(FiniteAct(monoid=monoid, carrier=carrier, action=action))
    return acts
