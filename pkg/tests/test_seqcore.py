import itertools
from math import comb

import pytest
from hypothesis import given, strategies as st

from delshadow.seqcore import (
    Component,
    Family,
    component_of,
    components,
    low_count,
    place_label,
    positions_of,
    reduced,
    stats,
)
from delshadow.shadow import seq_children


def seq_and_k(max_n=6, max_k=3):
    return st.integers(1, max_k).flatmap(
        lambda k: st.tuples(
            st.lists(st.integers(0, k), max_size=max_n).map(tuple), st.just(k)
        )
    )


class TestStats:
    def test_sequence_00121(self):
        s = stats((0, 0, 1, 2, 1))
        assert s.positions(0) == frozenset({1, 2})
        assert s.count(0) == 2
        assert s.rank == 4
        assert s.low_count(1) == 4

    def test_zero_free_word(self):
        s = stats((1, 1, 1))
        assert s.zero_count == 0
        assert s.rank == 3
        assert s.positions(1) == frozenset({1, 2, 3})

    def test_all_zero_word(self):
        s = stats((0, 0, 0))
        assert s.zero_count == 3
        assert s.rank == 0
        for r in range(4):
            assert s.low_count(r) == 3

    @given(seq_and_k())
    def test_value_counts_partition_and_rank(self, xk):
        x, k = xk
        s = stats(x)
        assert sum(s.count(v) for v in range(k + 1)) == len(x)
        assert s.rank == sum(v * s.count(v) for v in range(k + 1))
        assert s.low_count(k) == len(x)

    def test_exhaustive_consistency_small(self):
        for n in range(7):
            for k in range(1, 4):
                for x in itertools.product(range(k + 1), repeat=n):
                    s = stats(x)
                    assert sum(s.count(v) for v in range(k + 1)) == n
                    assert s.rank == sum(v * s.count(v) for v in range(k + 1))
                if n > 2:
                    break  # k sweep only needed once the alphabet matters


class TestReduced:
    @pytest.mark.parametrize(
        "x,expected",
        [((0, 0, 1, 2, 1), (1, 2, 1)), ((1, 1, 1), (1, 1, 1)), ((0, 0, 0), ())],
    )
    def test_examples(self, x, expected):
        assert reduced(x) == expected

    @given(seq_and_k())
    def test_deleting_a_zero_keeps_the_reduced_word(self, xk):
        x, k = xk
        for y in seq_children(x, 0):
            assert reduced(y) == reduced(x)


class TestFamily:
    def test_rejects_k_zero(self):
        with pytest.raises(ValueError):
            Family.of(2, 0, [(0, 0)])

    def test_rejects_out_of_range_entries(self):
        with pytest.raises(ValueError):
            Family.of(2, 1, [(0, 2)])

    def test_rejects_length_mismatch(self):
        with pytest.raises(ValueError):
            Family.of(2, 1, [(0, 1, 1)])

    def test_duplicates_collapse(self):
        a = Family.of(2, 1, [(0, 1), (0, 1)])
        assert len(a) == 1

    def test_empty_sequence_is_first_class(self):
        a = Family.of(0, 2, [()])
        assert len(a) == 1 and () in a

    def test_iteration_is_in_leq_order(self):
        a = Family.of(2, 1, [(0, 0), (1, 1), (1, 0), (0, 1)])
        assert list(a) == [(1, 1), (0, 1), (1, 0), (0, 0)]


class TestComponents:
    def test_two_components_at_n2_k2(self):
        comps = components(2, 2, 1)
        by_label = {c.label: c.members() for c in comps}
        assert by_label == {
            (2,): {(0, 2), (2, 0)},
            (1,): {(0, 1), (1, 0)},
        }

    def test_zero_free_components_are_singletons(self):
        comps = components(3, 2, 0)
        assert len(comps) == 8
        assert all(c.size() == 1 for c in comps)

    def test_component_of_1001(self):
        c = component_of((1, 0, 0, 1), 1)
        assert c.label == (1, 1)
        assert c.size() == comb(4, 2)
        members = c.members()
        assert len(members) == 6
        assert all(reduced(x) == (1, 1) for x in members)

    @pytest.mark.parametrize("n,k", [(2, 1), (3, 2), (4, 2), (3, 3)])
    def test_level_partition(self, n, k):
        for i in range(n + 1):
            comps = components(n, k, i)
            assert len(comps) == k ** (n - i)
            total = sum(c.size() for c in comps)
            assert total == comb(n, i) * k ** (n - i)
            seen = set()
            for c in comps:
                mem = c.members()
                assert len(mem) == c.size()
                assert not (seen & mem)
                seen |= mem

    def test_generalized_level_sizes(self):
        # levels counted by the number of coordinates <= r
        for n, k, r in [(3, 2, 1), (4, 3, 1), (3, 3, 2)]:
            for i in range(n + 1):
                count = sum(
                    1
                    for x in itertools.product(range(k + 1), repeat=n)
                    if low_count(x, r) == i
                )
                assert count == comb(n, i) * (r + 1) ** i * (k - r) ** (n - i)


def test_place_label_roundtrip():
    x = place_label((1, 2, 1), frozenset({1, 2}), 5)
    assert x == (0, 0, 1, 2, 1)
    assert positions_of(x, 0) == frozenset({1, 2})
