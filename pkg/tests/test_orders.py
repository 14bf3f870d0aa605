import itertools
from math import comb

import pytest
from hypothesis import given, strategies as st

from delshadow.orders import (
    c_key,
    c_less,
    colex_combinations,
    colex_initial_positions,
    colex_less,
    initial_segment_leq,
    iter_leq,
    leq_key,
    leq_less,
    simplicial_initial_segment,
    simplicial_less,
    simplicial_sorted,
)
from delshadow.seqcore import place_label, zero_count


class TestColex:
    def test_examples(self):
        assert colex_less({1, 2}, {1, 3})
        assert colex_less({2, 3}, {1, 4})
        assert not colex_less({1, 3}, {1, 3})

    def test_size_mismatch_is_an_error(self):
        with pytest.raises(ValueError):
            colex_less({1}, {1, 2})

    def test_full_colex_order_on_4_choose_2(self):
        got = [tuple(sorted(s)) for s in colex_initial_positions(4, 2, 6)]
        assert got == [(1, 2), (1, 3), (2, 3), (1, 4), (2, 4), (3, 4)]

    def test_initial_positions_examples(self):
        assert colex_initial_positions(4, 2, 3) == [
            frozenset({1, 2}),
            frozenset({1, 3}),
            frozenset({2, 3}),
        ]
        assert len(colex_initial_positions(5, 2, 10)) == 10
        assert colex_initial_positions(4, 0, 1) == [frozenset()]

    def test_out_of_range_size(self):
        with pytest.raises(ValueError):
            colex_initial_positions(4, 2, 7)

    def test_streaming_matches_sorting(self):
        for n in range(7):
            for r in range(n + 1):
                streamed = list(colex_combinations(n, r))
                sorted_all = sorted(
                    itertools.combinations(range(1, n + 1), r),
                    key=lambda s: tuple(sorted(s, reverse=True)),
                )
                assert streamed == sorted_all


class TestSimplicial:
    def test_examples(self):
        assert simplicial_less((0, 0, 1), (0, 1, 1))
        assert simplicial_less((1, 0), (0, 1))
        assert simplicial_less((1, 0, 1), (0, 1, 1))

    def test_rejects_larger_alphabets(self):
        with pytest.raises(ValueError):
            simplicial_less((0, 2), (0, 1))

    def test_initial_segment(self):
        assert simplicial_initial_segment(2, 2).members == {(0, 0), (1, 0)}


class TestCOrder:
    def test_examples(self):
        assert c_less((1, 2), (2, 1))
        assert c_less((1, 2), (1, 1))

    def test_full_order_on_two_squared(self):
        words = list(itertools.product((1, 2), repeat=2))
        ordered = sorted(words, key=lambda u: c_key(u, 2))
        assert ordered == [(2, 2), (1, 2), (2, 1), (1, 1)]

    def test_length_mismatch(self):
        with pytest.raises(ValueError):
            c_less((1,), (1, 2))


class TestLeq:
    def test_examples(self):
        assert leq_less((1, 1), (0, 1), 1)
        assert leq_less((0, 1), (1, 0), 1)

    def test_full_order_on_01_squared(self):
        seqs = list(itertools.product((0, 1), repeat=2))
        ordered = sorted(seqs, key=lambda x: leq_key(x, 1))
        assert ordered == [(1, 1), (0, 1), (1, 0), (0, 0)]

    def test_length_mismatch(self):
        with pytest.raises(ValueError):
            leq_less((0, 1), (0, 1, 1), 1)


@pytest.mark.parametrize("n", range(1, 5))
@pytest.mark.parametrize("k", range(1, 4))
class TestStrictOrderLaws:
    def test_totality_and_antisymmetry(self, n, k):
        universe = list(itertools.product(range(k + 1), repeat=n))
        for x, y in itertools.combinations(universe, 2):
            assert leq_less(x, y, k) != leq_less(y, x, k)
        for x in universe:
            assert not leq_less(x, x, k)

    def test_transitivity(self, n, k):
        if (k + 1) ** n > 27:
            pytest.skip("triple sweep kept to universes of <= 27 elements")
        universe = list(itertools.product(range(k + 1), repeat=n))
        for x, y, z in itertools.permutations(universe, 3):
            if leq_less(x, y, k) and leq_less(y, z, k):
                assert leq_less(x, z, k)


class TestInitialSegmentLeq:
    def test_examples(self):
        assert initial_segment_leq(2, 1, 3).members == {(1, 1), (0, 1), (1, 0)}
        assert initial_segment_leq(2, 2, 4).members == {(2, 2), (1, 2), (2, 1), (1, 1)}
        assert len(initial_segment_leq(3, 2, 0)) == 0

    def test_out_of_range(self):
        with pytest.raises(ValueError):
            initial_segment_leq(2, 1, 5)

    @pytest.mark.parametrize(
        "n,k", [(2, 1), (4, 1), (6, 1), (9, 1), (3, 2), (6, 2), (2, 3), (4, 3)]
    )
    def test_streaming_equals_sorting_the_universe(self, n, k):
        universe = sorted(
            itertools.product(range(k + 1), repeat=n), key=lambda x: leq_key(x, k)
        )
        assert list(iter_leq(n, k)) == universe

    @given(st.integers(1, 4), st.integers(1, 3), st.data())
    def test_prefix_property(self, n, k, data):
        m = data.draw(st.integers(0, (k + 1) ** n - 1))
        small = initial_segment_leq(n, k, m)
        big = initial_segment_leq(n, k, m + 1)
        assert small.members < big.members


class TestReversalIsomorphism:
    """Appending the high levels to a colex piece of one level and reversing
    every sequence lands on a simplicial initial segment."""

    @pytest.mark.parametrize("n", range(1, 6))
    def test_reversed_construction_is_simplicial_initial(self, n):
        universe = simplicial_sorted(n)
        for r in range(n + 1):
            high = [
                x
                for x in itertools.product((0, 1), repeat=n)
                if zero_count(x) > r
            ]
            for m in range(comb(n, r) + 1):
                piece = [
                    place_label(tuple([1] * (n - r)), zeros, n)
                    for zeros in colex_initial_positions(n, r, m)
                ]
                c2 = set(high) | set(piece)
                reversed_c2 = {tuple(reversed(x)) for x in c2}
                assert reversed_c2 == set(universe[: len(c2)])
