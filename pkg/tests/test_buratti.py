from itertools import combinations_with_replacement

import pytest
from hypothesis import given, settings, strategies as st

import helpers
from hamdec import (
    BadMultisetSize,
    LengthMultiset,
    NotPrime,
    find_path,
    sweep,
)
from hamdec.buratti import enumerate_multisets, multiset_count


class TestFindPath:
    def test_walecki_instance(self):
        outcome = find_path(5, [1, 1, 2, 2])
        assert outcome.witness == (0, 1, 4, 2, 3)

    def test_smallest(self):
        assert find_path(3, [1, 1]).witness == (0, 1, 2)

    @pytest.mark.parametrize("lengths", [
        (3, 3, 3, 3, 3, 3, 3, 3),
        (1, 3, 3, 3, 3, 3, 3, 3),
        (2, 3, 3, 3, 3, 3, 3, 3),
        (3, 3, 3, 3, 3, 3, 3, 4),
    ])
    def test_k9_nonexistence(self, lengths):
        outcome = find_path(9, lengths)
        assert not outcome.found
        assert outcome.witness is None

    def test_size_mismatch(self):
        with pytest.raises(BadMultisetSize):
            find_path(5, [1, 1])
        with pytest.raises(BadMultisetSize):
            find_path(5, [1, 1, 2, 3])
        with pytest.raises(BadMultisetSize):
            find_path(5, LengthMultiset(7, [1, 1, 2, 2, 3, 3]))

    def test_accepts_multiset_type(self):
        assert find_path(5, LengthMultiset(5, {1: 2, 2: 2})).found

    def test_soundness_over_all_small_multisets(self):
        for k in range(3, 10):
            for lengths in combinations_with_replacement(range(1, k // 2 + 1), k - 1):
                outcome = find_path(k, lengths)
                if outcome.found:
                    assert helpers.is_hamilton_with_lengths(outcome.witness, k, lengths)

    def test_matches_fixed_start_oracle(self):
        for k in range(2, 7):
            for lengths in combinations_with_replacement(range(1, k // 2 + 1), k - 1):
                assert find_path(k, lengths).found == helpers.naive_find(k, lengths)

    def test_matches_oracle_at_k9(self):
        for lengths in combinations_with_replacement((1, 2, 3, 4), 8):
            assert find_path(9, lengths).found == helpers.naive_find(9, lengths)

    def test_symmetry_reductions_do_not_change_status(self):
        # The oracle here enumerates every vertex sequence with no symmetry
        # reduction at all.
        for k in range(2, 7):
            for lengths in combinations_with_replacement(range(1, k // 2 + 1), k - 1):
                assert find_path(k, lengths).found == helpers.naive_find_unreduced(k, lengths)

    def test_deterministic(self):
        a = find_path(9, [1, 2, 3, 4, 4, 4, 4, 4])
        b = find_path(9, [1, 2, 3, 4, 4, 4, 4, 4])
        assert a.witness == b.witness and a.nodes_expanded == b.nodes_expanded


@given(st.integers(2, 9), st.data())
@settings(max_examples=80, deadline=None)
def test_found_witness_is_always_sound(k, data):
    lengths = data.draw(st.lists(st.integers(1, k // 2), min_size=k - 1, max_size=k - 1))
    outcome = find_path(k, lengths)
    if outcome.found:
        assert helpers.is_hamilton_with_lengths(outcome.witness, k, lengths)


class TestSweep:
    def test_p5(self):
        report = sweep(5)
        assert len(report.entries) == report.total == 5
        assert report.clean

    def test_p7(self):
        report = sweep(7)
        assert len(report.entries) == 28
        assert not report.failures

    def test_not_prime(self):
        for p in (1, 2, 4, 9, 15):
            with pytest.raises(NotPrime):
                sweep(p)

    def test_counts_match_stars_and_bars(self):
        for p in (3, 5, 7, 11):
            assert multiset_count(p) == sum(1 for _ in enumerate_multisets(p))

    def test_sampling_is_seeded_and_stable(self):
        a = sweep(11, sample=50, seed=4)
        b = sweep(11, sample=50, seed=4)
        assert a.sampled and len(a.entries) == 50
        assert [m for m, _ in a.entries] == [m for m, _ in b.entries]
        assert [o.witness for _, o in a.entries] == [o.witness for _, o in b.entries]

    def test_sample_larger_than_space_runs_everything(self):
        report = sweep(5, sample=100)
        assert not report.sampled and len(report.entries) == 5

    def test_parallel_results_identical(self):
        solo = sweep(7, jobs=1)
        multi = sweep(7, jobs=2)
        assert [(m, o.witness) for m, o in solo.entries] == \
               [(m, o.witness) for m, o in multi.entries]
