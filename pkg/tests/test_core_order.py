"""Finite preorders: closure, relations, maximal elements, quotients."""

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ordermono import (
    FinitePreorder,
    OrderRelation,
    equivalence_class,
    from_relation_pairs,
    interval_preorder_relate,
    maximal_elements_in,
    quotient,
    relate,
    reverse_relation,
    sample_interval_preorder,
    up_set,
)
from _generators import all_preorders, random_preorder


def chain(n: int) -> FinitePreorder:
    return from_relation_pairs(n, [(i, i + 1) for i in range(n - 1)])


def antichain(n: int) -> FinitePreorder:
    return from_relation_pairs(n, [])


class TestClosure:
    def test_transitive_closure_adds_composite_pair(self):
        p = from_relation_pairs(3, [(0, 1), (1, 2)])
        assert p.le(0, 2)

    def test_empty_pairs_give_identity_relation(self):
        p = from_relation_pairs(2, [])
        assert p.le(0, 0) and p.le(1, 1)
        assert not p.le(0, 1) and not p.le(1, 0)

    def test_cycle_collapses_to_equivalence(self):
        p = from_relation_pairs(3, [(0, 1), (1, 0)])
        assert p.equivalent(0, 1)
        assert p.incomparable(0, 2) and p.incomparable(1, 2)

    def test_out_of_range_pair_rejected(self):
        with pytest.raises(ValueError):
            from_relation_pairs(2, [(0, 2)])

    def test_constructor_rejects_nonreflexive_matrix(self):
        with pytest.raises(ValueError):
            FinitePreorder(n=2, leq=((False, False), (False, True)))

    def test_constructor_rejects_nontransitive_matrix(self):
        leq = (
            (True, True, False),
            (False, True, True),
            (False, False, True),
        )
        with pytest.raises(ValueError):
            FinitePreorder(n=3, leq=leq)

    @given(st.integers(0, 10_000), st.integers(2, 8))
    @settings(max_examples=60, deadline=None)
    def test_closure_is_reflexive_and_transitive(self, seed, n):
        p = random_preorder(random.Random(seed), n, density=0.4)
        for x in p.elements():
            assert p.le(x, x)
        for x in p.elements():
            for y in p.elements():
                for z in p.elements():
                    if p.le(x, y) and p.le(y, z):
                        assert p.le(x, z)

    def test_closure_holds_on_a_large_instance(self):
        p = random_preorder(random.Random(7), 64, density=0.05)
        assert p.n == 64
        for x in p.elements():
            assert p.le(x, x)
        # one non-trivial composite spot check per row keeps this O(n^2)
        for x in p.elements():
            for y in p.elements():
                if p.le(x, y):
                    assert all(
                        p.le(x, z) for z in p.elements() if p.le(y, z)
                    )


class TestRelate:
    def test_reflexive_pair_is_equivalent(self):
        p = chain(3)
        assert relate(p, 1, 1) is OrderRelation.EQUIVALENT

    def test_chain_pair_strictly_less(self):
        p = chain(2)
        assert relate(p, 0, 1) is OrderRelation.STRICTLY_LESS
        assert relate(p, 1, 0) is OrderRelation.STRICTLY_GREATER

    def test_antichain_pair_incomparable(self):
        p = antichain(2)
        assert relate(p, 0, 1) is OrderRelation.INCOMPARABLE

    def test_index_out_of_range(self):
        with pytest.raises(ValueError):
            relate(chain(2), 0, 5)

    @given(st.integers(0, 10_000), st.integers(2, 7))
    @settings(max_examples=60, deadline=None)
    def test_swapping_arguments_reverses_the_relation(self, seed, n):
        p = random_preorder(random.Random(seed), n)
        for x in p.elements():
            for y in p.elements():
                assert relate(p, y, x) is reverse_relation(relate(p, x, y))

    def test_reverse_relation_fixes_symmetric_values(self):
        assert reverse_relation(OrderRelation.EQUIVALENT) is OrderRelation.EQUIVALENT
        assert (
            reverse_relation(OrderRelation.INCOMPARABLE)
            is OrderRelation.INCOMPARABLE
        )
        assert (
            reverse_relation(OrderRelation.STRICTLY_LESS)
            is OrderRelation.STRICTLY_GREATER
        )


class TestUpSet:
    def test_chain_up_sets(self):
        p = chain(3)
        assert up_set(p, 0) == {0, 1, 2}
        assert up_set(p, 0, strict=True) == {1, 2}
        assert up_set(p, 2) == {2}

    def test_antichain_up_set_is_own_class(self):
        p = antichain(3)
        assert up_set(p, 1) == {1}

    def test_equivalent_elements_share_weak_up_set(self):
        p = from_relation_pairs(3, [(0, 1), (1, 0), (1, 2)])
        assert up_set(p, 0) == up_set(p, 1) == {0, 1, 2}
        assert up_set(p, 0, strict=True) == {2}

    @given(st.integers(0, 10_000), st.integers(2, 7))
    @settings(max_examples=60, deadline=None)
    def test_up_sets_are_increasing(self, seed, n):
        p = random_preorder(random.Random(seed), n)
        for x in p.elements():
            members = up_set(p, x)
            for y in members:
                for z in p.elements():
                    if p.le(y, z):
                        assert z in members


class TestMaximal:
    def test_two_element_chain(self):
        p = chain(2)
        assert maximal_elements_in(p, [0, 1]) == {1}

    def test_two_incomparable_elements_both_maximal(self):
        p = antichain(2)
        assert maximal_elements_in(p, [0, 1]) == {0, 1}

    def test_chain_of_five_top_only(self):
        p = chain(5)
        assert maximal_elements_in(p, range(5)) == {4}

    def test_empty_domain_is_an_error(self):
        with pytest.raises(ValueError, match="empty domain"):
            maximal_elements_in(chain(2), [])

    @given(st.integers(0, 10_000), st.integers(2, 6))
    @settings(max_examples=40, deadline=None)
    def test_matches_definition_oracle_over_all_subsets(self, seed, n):
        p = random_preorder(random.Random(seed), n)
        for mask in range(1, 2**n):
            subset = [x for x in p.elements() if mask >> x & 1]
            oracle = frozenset(
                x
                for x in subset
                if not any(
                    p.le(x, y) and not p.le(y, x) for y in subset
                )
            )
            assert maximal_elements_in(p, subset) == oracle
            assert oracle  # finite nonempty sets always have maximal elements


class TestQuotient:
    def test_antisymmetric_space_is_unchanged(self):
        p = chain(3)
        classes, induced = quotient(p)
        assert classes == ({0}, {1}, {2})
        assert induced.leq == p.leq

    def test_equivalence_below_a_point(self):
        p = from_relation_pairs(3, [(0, 1), (1, 0), (1, 2)])
        classes, induced = quotient(p)
        assert classes == ({0, 1}, {2})
        assert induced.n == 2
        assert induced.le(0, 1) and not induced.le(1, 0)

    def test_full_equivalence_collapses_to_a_point(self):
        p = from_relation_pairs(3, [(0, 1), (1, 2), (2, 0)])
        classes, induced = quotient(p)
        assert classes == ({0, 1, 2},)
        assert induced.n == 1

    @given(st.integers(0, 10_000), st.integers(2, 7))
    @settings(max_examples=60, deadline=None)
    def test_induced_relation_is_an_antisymmetric_match(self, seed, n):
        p = random_preorder(random.Random(seed), n, density=0.4)
        classes, induced = quotient(p)
        reps = [min(cls) for cls in classes]
        for i, a in enumerate(reps):
            for j, b in enumerate(reps):
                assert induced.le(i, j) == p.le(a, b)
                if i != j:
                    assert not (induced.le(i, j) and induced.le(j, i))
        assert frozenset().union(*classes) == frozenset(p.elements())


class TestIntervalPreorder:
    def test_equal_points_equivalent(self):
        x = Fraction(3, 10)
        assert interval_preorder_relate(x, x) is OrderRelation.EQUIVALENT

    def test_shifted_copy_is_the_knife_edge(self):
        x = Fraction(3, 10)
        assert (
            interval_preorder_relate(x, x + 2) is OrderRelation.INCOMPARABLE
        )

    def test_upper_point_off_the_edge_dominates(self):
        assert (
            interval_preorder_relate(Fraction(3, 10), Fraction(27, 10))
            is OrderRelation.STRICTLY_LESS
        )
        assert (
            interval_preorder_relate(Fraction(27, 10), Fraction(3, 10))
            is OrderRelation.STRICTLY_GREATER
        )

    def test_two_lower_points_incomparable(self):
        assert (
            interval_preorder_relate(Fraction(1, 10), Fraction(2, 10))
            is OrderRelation.INCOMPARABLE
        )

    def test_domain_is_enforced(self):
        with pytest.raises(ValueError):
            interval_preorder_relate(Fraction(3, 2), Fraction(0))

    def test_floats_are_rejected(self):
        with pytest.raises(TypeError):
            interval_preorder_relate(0.3, Fraction(27, 10))

    def test_sample_knife_edge_pair_is_an_antichain(self):
        p = sample_interval_preorder([Fraction(1, 4), Fraction(9, 4)])
        assert relate(p, 0, 1) is OrderRelation.INCOMPARABLE

    def test_sample_off_edge_pair_is_a_chain(self):
        p = sample_interval_preorder([Fraction(1, 4), Fraction(5, 2)])
        assert relate(p, 0, 1) is OrderRelation.STRICTLY_LESS

    def test_each_lower_point_below_exactly_one_upper_point(self):
        points = [
            Fraction(1, 10),
            Fraction(2, 10),
            Fraction(21, 10),
            Fraction(22, 10),
        ]
        p = sample_interval_preorder(points)
        for low in (0, 1):
            above = [up for up in (2, 3) if p.strictly_less(low, up)]
            assert len(above) == 1

    def test_sample_rejects_duplicates(self):
        with pytest.raises(ValueError):
            sample_interval_preorder([Fraction(1, 4), Fraction(1, 4)])

    def test_sample_matches_pointwise_relation(self):
        points = [
            Fraction(0),
            Fraction(1, 3),
            Fraction(1),
            Fraction(7, 3),
            Fraction(3),
        ]
        p = sample_interval_preorder(points)
        for i, a in enumerate(points):
            for j, b in enumerate(points):
                assert relate(p, i, j) is interval_preorder_relate(a, b)


class TestEquivalenceClass:
    def test_class_members_share_relations(self):
        p = from_relation_pairs(4, [(0, 1), (1, 0), (1, 2), (3, 0)])
        assert equivalence_class(p, 0) == {0, 1}
        assert equivalence_class(p, 3) == {3}

    def test_enumeration_of_small_spaces_has_expected_counts(self):
        # distinct preorders on labeled ground sets of sizes 1..3
        assert len(all_preorders(1)) == 1
        assert len(all_preorders(2)) == 4
        assert len(all_preorders(3)) == 29
