"""Tests for decomposition into indecomposable components."""

from collections import Counter

import pytest

from actkit.algebra.act import coproduct, free_act, principal_right_act, regular_act
from actkit.algebra.canonical import ComponentForm
from actkit.algebra.decomposition import (
    Decomposition,
    IsoSignature,
    brute_force_split,
    check_decomposition,
    component_forms,
    decompose,
    is_indecomposable,
    iso_signature,
)
from actkit.algebra.isomorphism import are_isomorphic
from actkit.algebra.monoid import parse_builtin
from actkit.algebra.union_find import UnionFind
from actkit.exceptions import SizeBoundExceeded
from tests.conftest import fixed_act, swap_act

SWAP = ComponentForm(size=2, table=((0, 1), (1, 0)))
POINT = ComponentForm(size=1, table=((0, 0),))


class TestUnionFind:
    def test_groups_ordered_by_smallest_index(self):
        uf = UnionFind(5)
        uf.union(3, 1)
        uf.union(4, 0)
        assert uf.groups() == [[0, 4], [1, 3], [2]]
        assert len(uf) == 3

    def test_find_is_shared_after_union(self):
        uf = UnionFind(4)
        uf.union(0, 1)
        uf.union(1, 2)
        assert uf.find(0) == uf.find(2)
        assert uf.find(3) == 3


class TestDecompose:
    """Tests for decompose."""

    def test_coproduct_splits_into_summands(self, z2):
        act = coproduct([swap_act(z2), fixed_act(z2)])
        assert decompose(act).components == ((0, 1), (2,))

    def test_interleaved_components(self, z2):
        act = coproduct([fixed_act(z2), swap_act(z2), fixed_act(z2)])
        assert decompose(act).components == ((0,), (1, 2), (3,))

    def test_regular_act_is_indecomposable(self, t2):
        assert is_indecomposable(regular_act(t2))

    def test_zig_zag_connects(self, t2):
        # eS for a constant e: both points are joined through the action
        assert is_indecomposable(principal_right_act(t2, t2.index("00")))

    def test_component_acts_reassemble(self, z2):
        act = coproduct([fixed_act(z2), swap_act(z2), fixed_act(z2)])
        decomposition = decompose(act)
        assert [part.size for part in decomposition.component_acts()] == [1, 2, 1]
        assert are_isomorphic(decomposition.reassemble(), act)

    @pytest.mark.parametrize(
        "name",
        [
            "trivial",
            "cyclic_group(2)",
            "cyclic_group(3)",
            "full_transformation(2)",
            "full_transformation(3)",
        ],
    )
    @pytest.mark.parametrize("k", [1, 2, 3, 4])
    def test_free_act_components_are_regular(self, name, k):
        monoid = parse_builtin(name)
        decomposition = decompose(free_act(monoid, k))
        assert len(decomposition) == k
        regular = regular_act(monoid)
        assert all(are_isomorphic(part, regular) for part in decomposition.component_acts())


class TestBruteForceSplit:
    """Tests for the subset-search oracle."""

    def test_finds_split(self, z2):
        act = coproduct([swap_act(z2), fixed_act(z2)])
        assert brute_force_split(act) == ((0, 1), (2,))

    def test_no_split_for_indecomposable(self, t2):
        assert brute_force_split(regular_act(t2)) is None

    def test_single_point(self, z2):
        assert brute_force_split(fixed_act(z2)) is None

    def test_size_bound(self, z2):
        with pytest.raises(SizeBoundExceeded) as exc_info:
            brute_force_split(swap_act(z2), bound=1)
        assert exc_info.value.details == {"size": 2, "bound": 1}


class TestCheckDecomposition:
    def test_decompose_output_is_clean(self, t2):
        act = coproduct([regular_act(t2), principal_right_act(t2, t2.index("11"))])
        assert check_decomposition(decompose(act)) == []

    def test_overlap_detected(self, z2):
        act = coproduct([swap_act(z2), fixed_act(z2)])
        violations = check_decomposition(Decomposition(act=act, components=((0, 1), (1, 2))))
        assert "components overlap" in violations

    def test_missing_element_detected(self, z2):
        act = coproduct([swap_act(z2), fixed_act(z2)])
        violations = check_decomposition(Decomposition(act=act, components=((0, 1),)))
        assert violations == ["components do not cover the carrier"]

    def test_unclosed_component_detected(self, z2):
        act = coproduct([swap_act(z2), fixed_act(z2)])
        violations = check_decomposition(Decomposition(act=act, components=((0,), (1, 2))))
        assert "component 0 is not closed under the action" in violations

    def test_splittable_component_detected(self, z2):
        act = coproduct([swap_act(z2), fixed_act(z2)])
        violations = check_decomposition(Decomposition(act=act, components=((0, 1, 2),)))
        assert violations == ["component 0 splits into two subacts"]


class TestIsoSignature:
    """Tests for signatures (multisets of component forms)."""

    def test_signature_of_mixed_act(self, z2):
        act = coproduct([fixed_act(z2), swap_act(z2), fixed_act(z2)])
        signature = iso_signature(act)
        assert signature.counter == Counter({POINT: 2, SWAP: 1})
        assert sum(signature.counter.values()) == 3
        assert len(signature) == 2

    def test_counts_are_sorted(self, z2):
        act = coproduct([swap_act(z2), fixed_act(z2)])
        assert [form for form, _ in iso_signature(act)] == [POINT, SWAP]

    def test_addition_is_coproduct(self, z2):
        left = iso_signature(swap_act(z2))
        right = iso_signature(coproduct([fixed_act(z2), swap_act(z2)]))
        assert left + right == IsoSignature.from_counter(Counter({SWAP: 2, POINT: 1}))

    def test_regular_z2_is_the_swap(self, z2):
        assert iso_signature(regular_act(z2)) == iso_signature(swap_act(z2))

    def test_component_forms_follow_component_order(self, z2):
        act = coproduct([swap_act(z2), fixed_act(z2)])
        assert [form for form, _ in component_forms(decompose(act))] == [SWAP, POINT]

    def test_to_document(self, z2):
        doc = iso_signature(fixed_act(z2)).to_document(z2.to_document())
        assert doc == [
            {
                "form": {"monoid": z2.to_document(), "elements": ["0"], "action": [["0", "0"]]},
                "multiplicity": 1,
            }
        ]
