"""Tests for symbolic acts and the cancellation deciders."""

import pytest
from hypothesis import given, strategies as st

from actkit.algebra.act import coproduct, free_act
from actkit.algebra.symbolic import (
    OMEGA,
    RULE_ALL_CLASSES_FINITE,
    RULE_FINITELY_DECOMPOSABLE,
    RULE_INDECOMPOSABLE,
    RULE_INFINITE_CLASS,
    Cardinal,
    CancellationVerdict,
    ExternalWitness,
    InternalWitness,
    SymbolicAct,
    alternating_copies,
    card_add,
    decide_cancellable,
    decide_internally_cancellable,
    free_act_symbolic,
    infinite_copies,
    is_finitely_decomposable,
    load_symbolic,
    projective_act_symbolic,
    signature_P,
    sym_coproduct,
    sym_iso,
    symbolize,
    theorem_eq_predicate,
)
from actkit.exceptions import EmptyAct, MalformedDocument, NotIdempotent, WitnessError
from tests.conftest import fixed_act, swap_act

cardinals = st.one_of(st.integers(min_value=1, max_value=6).map(Cardinal), st.just(OMEGA))


@st.composite
def non_empty_symbolic_acts(draw):
    entries = draw(st.dictionaries(st.sampled_from("abcde"), cardinals, max_size=4))
    families = draw(st.dictionaries(st.sampled_from("FGH"), cardinals, max_size=2))
    if not entries and not families:
        entries = {draw(st.sampled_from("abcde")): draw(cardinals)}
    return SymbolicAct.of(entries=entries, families=families)


class TestCardinal:
    """Tests for finite cardinals and ω."""

    def test_ordering(self):
        assert Cardinal(3) < Cardinal(4) < OMEGA
        assert not OMEGA < OMEGA
        assert max([Cardinal(9), OMEGA, Cardinal(1)]) == OMEGA

    def test_addition(self):
        assert card_add(Cardinal(2), Cardinal(3)) == Cardinal(5)
        assert card_add(Cardinal(2), OMEGA) == OMEGA
        assert OMEGA + OMEGA == OMEGA

    def test_json(self):
        assert OMEGA.to_json() == "omega"
        assert Cardinal.from_json("omega") == OMEGA
        assert Cardinal.from_json(4) == Cardinal(4)

    @pytest.mark.parametrize("raw", [-1, 1.5, True, "infinity"])
    def test_from_json_rejects(self, raw):
        with pytest.raises(MalformedDocument):
            Cardinal.from_json(raw)

    def test_str(self):
        assert str(OMEGA) == "ω"
        assert str(Cardinal(7)) == "7"


class TestSymbolicAct:
    """Tests for construction, loading and the coproduct."""

    def test_must_be_non_empty(self):
        with pytest.raises(EmptyAct):
            SymbolicAct.of()

    def test_rejects_zero_multiplicity(self):
        with pytest.raises(MalformedDocument):
            SymbolicAct.of(entries={"a": 0})

    def test_entries_are_sorted(self):
        act = SymbolicAct.of(entries={"b": 1, "a": OMEGA})
        assert act.entries == (("a", OMEGA), ("b", Cardinal(1)))

    def test_load_document(self):
        act = load_symbolic({"entries": {"a": 2}, "families": {"F": "omega"}})
        assert act.entry_map == {"a": Cardinal(2)}
        assert act.family_map == {"F": OMEGA}

    def test_load_rejects_unknown_field(self):
        with pytest.raises(MalformedDocument):
            load_symbolic({"entries": {"a": 1}, "types": {}})

    def test_load_rejects_bad_multiplicity(self):
        with pytest.raises(MalformedDocument):
            load_symbolic({"entries": {"a": "many"}})

    @pytest.mark.parametrize("raw", [True, "3", 2.0])
    def test_load_rejects_non_integer_multiplicity(self, raw):
        with pytest.raises(MalformedDocument) as exc_info:
            load_symbolic({"entries": {"t": raw}})
        assert exc_info.value.details["location"].startswith("entries.t")

    def test_to_document(self):
        act = SymbolicAct.of(entries={"a": OMEGA}, families={"F": 2})
        assert act.to_document() == {"entries": {"a": "omega"}, "families": {"F": 2}}

    def test_coproduct_adds_multiplicities(self):
        left = SymbolicAct.of(entries={"a": 2, "b": 1})
        right = SymbolicAct.of(entries={"a": 3}, families={"F": OMEGA})
        total = sym_coproduct(left, right)
        assert total == SymbolicAct.of(entries={"a": 5, "b": 1}, families={"F": OMEGA})

    def test_iso_compares_types_and_multiplicities(self):
        assert sym_iso(SymbolicAct.of(entries={"a": 1}), SymbolicAct.of(entries={"a": 1}))
        assert not sym_iso(SymbolicAct.of(entries={"a": 1}), SymbolicAct.of(entries={"a": 2}))
        assert not sym_iso(SymbolicAct.of(entries={"F": 1}), SymbolicAct.of(families={"F": 1}))

    def test_signature_P(self):
        act = SymbolicAct.of(entries={"a": 2, "b": 2, "c": OMEGA}, families={"F": 1})
        assert signature_P(act) == {Cardinal(1), Cardinal(2), OMEGA}

    def test_finitely_decomposable(self):
        assert is_finitely_decomposable(SymbolicAct.of(entries={"a": 3, "b": 1}))
        assert not is_finitely_decomposable(SymbolicAct.of(entries={"a": OMEGA}))
        assert not is_finitely_decomposable(SymbolicAct.of(families={"F": 1}))


class TestDecideCancellable:
    """Tests for decide_cancellable."""

    def test_single_indecomposable(self):
        verdict = decide_cancellable(SymbolicAct.of(entries={"a": 1}))
        assert verdict == CancellationVerdict(cancellable=True, rule=RULE_INDECOMPOSABLE)

    def test_finitely_decomposable(self):
        verdict = decide_cancellable(SymbolicAct.of(entries={"a": 2, "b": 7}))
        assert verdict.cancellable
        assert verdict.rule == RULE_FINITELY_DECOMPOSABLE

    def test_family_with_finite_classes(self):
        verdict = decide_cancellable(SymbolicAct.of(entries={"a": 1}, families={"F": 3}))
        assert verdict.cancellable
        assert verdict.rule == RULE_ALL_CLASSES_FINITE
        assert verdict.witness is None

    def test_infinite_copies(self):
        verdict = decide_cancellable(infinite_copies("t"))
        assert not verdict.cancellable
        assert verdict.rule == RULE_INFINITE_CLASS
        assert verdict.witness == ExternalWitness(
            b=SymbolicAct.of(entries={"t": 1}), c=SymbolicAct.of(entries={"t": 2})
        )

    def test_alternating_coproduct(self):
        verdict = decide_cancellable(alternating_copies("b", "c"))
        assert not verdict.cancellable
        assert verdict.witness.b == SymbolicAct.of(entries={"b": 1})

    def test_infinite_family_witness(self):
        verdict = decide_cancellable(SymbolicAct.of(entries={"a": 1}, families={"F": OMEGA}))
        assert not verdict.cancellable
        assert verdict.witness.b == SymbolicAct.of(families={"F": 1})
        assert verdict.witness.c == SymbolicAct.of(families={"F": 2})

    def test_document(self):
        doc = decide_cancellable(infinite_copies("t")).to_document()
        assert doc == {
            "cancellable": False,
            "rule": "infinite-class",
            "witness": {
                "B": {"entries": {"t": 1}, "families": {}},
                "C": {"entries": {"t": 2}, "families": {}},
            },
        }

    @pytest.mark.parametrize("k", [1, 2, 3, 4, 5])
    def test_free_act_on_finite_basis(self, k):
        assert decide_cancellable(free_act_symbolic(Cardinal(k))).cancellable

    def test_free_act_on_infinite_basis(self):
        verdict = decide_cancellable(free_act_symbolic(OMEGA))
        assert not verdict.cancellable
        assert verdict.witness.b == SymbolicAct.of(entries={"S": 1})

    def test_alternating_needs_distinct_types(self):
        with pytest.raises(MalformedDocument):
            alternating_copies("b", "b")


class TestInternalCancellation:
    def test_infinite_copies_rebuild_the_act(self):
        act = infinite_copies("s")
        verdict = decide_internally_cancellable(act)
        assert not verdict.cancellable
        witness = verdict.witness
        assert isinstance(witness, InternalWitness)
        assert witness.d == act and witness.f == act
        assert witness.check(act) == []

    def test_finite_act_is_internally_cancellable(self):
        verdict = decide_internally_cancellable(SymbolicAct.of(entries={"a": 2}))
        assert verdict.cancellable
        assert verdict.to_document()["witness"] is None

    def test_document_has_four_summands(self):
        doc = decide_internally_cancellable(infinite_copies("s")).to_document()
        assert set(doc["witness"]) == {"C", "D", "E", "F"}

    def test_scans_multiplicities_independently(self, monkeypatch):
        monkeypatch.setattr("actkit.algebra.symbolic._infinite_class", lambda act: None)
        act = SymbolicAct.of(entries={"a": 2}, families={"F": OMEGA})

        verdict = decide_internally_cancellable(act)

        assert not verdict.cancellable
        assert verdict.witness.c == SymbolicAct.of(families={"F": 1})


class TestVerdictVerification:
    """Tests that witnesses are re-checked."""

    def test_negative_verdict_needs_witness(self):
        verdict = CancellationVerdict(cancellable=False, rule=RULE_INFINITE_CLASS)
        with pytest.raises(WitnessError):
            verdict.verify(infinite_copies("t"))

    def test_positive_verdict_must_not_carry_witness(self):
        one = SymbolicAct.of(entries={"t": 1})
        verdict = CancellationVerdict(
            cancellable=True, rule=RULE_INDECOMPOSABLE, witness=ExternalWitness(b=one, c=one)
        )
        with pytest.raises(WitnessError):
            verdict.verify(one)

    def test_bad_external_witness(self):
        one = SymbolicAct.of(entries={"t": 1})
        verdict = CancellationVerdict(
            cancellable=False, rule=RULE_INFINITE_CLASS, witness=ExternalWitness(b=one, c=one)
        )
        with pytest.raises(WitnessError) as exc_info:
            verdict.verify(infinite_copies("t"))
        assert "B is isomorphic to C" in exc_info.value.details["problems"]

    def test_external_witness_on_finite_act_fails(self):
        witness = ExternalWitness(
            b=SymbolicAct.of(entries={"t": 1}), c=SymbolicAct.of(entries={"t": 2})
        )
        assert witness.check(SymbolicAct.of(entries={"t": 5})) == [
            "A ⊔ B is not isomorphic to A ⊔ C"
        ]


class TestTheoremPredicate:
    def test_finite_multiplicities(self):
        assert theorem_eq_predicate(SymbolicAct.of(entries={"a": 2, "b": 7})) is True

    def test_infinite_multiplicity(self):
        assert theorem_eq_predicate(SymbolicAct.of(entries={"a": OMEGA})) is False

    def test_families_are_out_of_scope(self):
        assert theorem_eq_predicate(SymbolicAct.of(families={"F": 1})) is None


class TestBuilders:
    """Tests for symbolize and the projective builder."""

    def test_symbolize_uses_canonical_keys(self, z2):
        act = coproduct([swap_act(z2), fixed_act(z2), fixed_act(z2)])
        assert symbolize(act) == SymbolicAct.of(entries={"[[0,0]]": 2, "[[0,1],[1,0]]": 1})

    def test_symbolized_free_act_is_cancellable(self, z3):
        assert decide_cancellable(symbolize(free_act(z3, 3))).rule == RULE_FINITELY_DECOMPOSABLE

    def test_projective_act_merges_isomorphic_principal_acts(self, t2):
        act = projective_act_symbolic(
            t2, {t2.index("00"): Cardinal(1), t2.index("11"): Cardinal(2)}
        )
        assert len(act.entries) == 1
        assert act.entries[0][1] == Cardinal(3)

    def test_projective_act_with_infinite_multiplicity(self, t2):
        act = projective_act_symbolic(t2, {t2.identity: OMEGA, t2.index("00"): Cardinal(1)})
        assert len(act.entries) == 2
        assert not decide_cancellable(act).cancellable

    def test_projective_act_rejects_non_idempotent(self, t2):
        with pytest.raises(NotIdempotent):
            projective_act_symbolic(t2, {t2.index("10"): Cardinal(1)})

    def test_free_act_symbolic_needs_basis(self):
        with pytest.raises(EmptyAct):
            free_act_symbolic(Cardinal(0))


class TestDeciderLaws:
    """Property-based laws for the symbolic deciders."""

    @given(non_empty_symbolic_acts(), non_empty_symbolic_acts())
    def test_coproduct_is_commutative(self, a, b):
        assert sym_iso(sym_coproduct(a, b), sym_coproduct(b, a))

    @given(non_empty_symbolic_acts(), non_empty_symbolic_acts(), non_empty_symbolic_acts())
    def test_coproduct_is_associative(self, a, b, c):
        assert sym_coproduct(sym_coproduct(a, b), c) == sym_coproduct(a, sym_coproduct(b, c))

    @given(non_empty_symbolic_acts(), non_empty_symbolic_acts())
    def test_cancellable_coproduct_needs_both_summands(self, a, b):
        both = decide_cancellable(a).cancellable and decide_cancellable(b).cancellable
        assert decide_cancellable(sym_coproduct(a, b)).cancellable == both

    @given(non_empty_symbolic_acts())
    def test_verdicts_verify(self, a):
        decide_cancellable(a).verify(a)
        decide_internally_cancellable(a).verify(a)

    @given(non_empty_symbolic_acts())
    def test_internal_agrees_with_external(self, a):
        assert decide_internally_cancellable(a).cancellable == decide_cancellable(a).cancellable

    @given(non_empty_symbolic_acts())
    def test_cancellable_iff_no_infinite_class(self, a):
        assert decide_cancellable(a).cancellable == (OMEGA not in signature_P(a))
