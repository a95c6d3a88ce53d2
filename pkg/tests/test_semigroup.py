import random

import pytest

from rendezvous import (
    BoolMatrix,
    DimensionError,
    MatrixSet,
    NonNZError,
    cpr_set,
    default_max_depth,
    example_set,
    explore,
    kari_set,
    witness_replay,
)
from helpers import random_nz_set, random_primitive_set


def profile_lengths(result):
    return {k: entry.length for k, entry in result.krt.items()}


class TestExplore:
    def test_example_exponent_is_seven(self):
        result = explore(example_set())
        assert result.exponent.length == 7
        replay = witness_replay(example_set(), result.exponent.word)
        assert replay.is_all_ones()

    def test_rt2_is_one_on_primitive_non_permutation_sets(self):
        rng = random.Random(21)
        for _ in range(30):
            mset = random_primitive_set(rng, rng.randint(2, 4), 2)
            result = explore(mset)
            assert result.krt[2].length == 1

    def test_cpr_rt2_witness_is_first_generator(self):
        # Generator a of the cpr set already has a weight-2 column.
        result = explore(cpr_set())
        assert result.krt[2].length == 1
        assert result.krt[2].word == (0,)

    def test_profile_nondecreasing_and_first_reach(self):
        for mset in (example_set(), cpr_set()):
            result = explore(mset)
            lengths = [result.krt[k].length for k in range(2, mset.n + 1)]
            assert lengths == sorted(lengths)
            for k in range(2, mset.n + 1):
                entry = result.krt[k]
                mat = witness_replay(mset, entry.word)
                assert mat.weight_profile().max_weight >= k
                # no shorter prefix reaches weight k
                for cut in range(len(entry.word)):
                    prefix = witness_replay(mset, entry.word[:cut])
                    if cut == 0:
                        continue  # empty word is the identity
                    assert prefix.weight_profile().max_weight < k

    def test_rt_n_at_most_exponent(self):
        rng = random.Random(22)
        for _ in range(20):
            mset = random_primitive_set(rng, rng.randint(2, 4), 2)
            result = explore(mset)
            assert result.krt[mset.n].length <= result.exponent.length

    def test_non_primitive_reports_exhaustion(self):
        cycle = BoolMatrix.from_rows([[0, 1], [1, 0]])
        result = explore(MatrixSet.of([cycle]))
        assert result.exponent is None
        assert result.exhausted
        assert result.limit is None
        assert 2 not in result.krt

    def test_depth_limit_flags_partial_result(self):
        result = explore(example_set(), max_depth=2)
        assert result.exponent is None
        assert result.limit == "depth"
        assert result.depth_reached == 2

    def test_state_limit_flags_partial_result(self):
        result = explore(example_set(), max_states=3)
        assert result.limit == "states"
        assert result.exponent is None

    def test_stop_after_profile(self):
        result = explore(example_set(), stop_after_profile=True)
        assert profile_lengths(result) == {2: 1, 3: 2}
        assert result.limit == "profile"

    def test_dedup_soundness(self):
        rng = random.Random(23)
        for _ in range(30):
            mset = random_nz_set(rng, rng.randint(2, 4), rng.randint(1, 3))
            fast = explore(mset, max_depth=4)
            slow = explore(mset, max_depth=4, deduplicate=False, max_states=10**6)
            assert profile_lengths(fast) == profile_lengths(slow)
            exp_fast = fast.exponent.length if fast.exponent else None
            exp_slow = slow.exponent.length if slow.exponent else None
            assert exp_fast == exp_slow

    def test_default_depth_covers_sandwich(self):
        assert default_max_depth(3) == 11
        assert default_max_depth(10) == 172

    def test_dimension_cap(self):
        big = MatrixSet.of([BoolMatrix.identity(65)])
        with pytest.raises(DimensionError):
            explore(big)

    def test_non_nz_rejected(self):
        bad = MatrixSet.of([BoolMatrix.from_rows([[1, 0], [0, 0]])])
        with pytest.raises(NonNZError):
            explore(bad)

    def test_deterministic_across_runs(self):
        a = explore(cpr_set())
        b = explore(cpr_set())
        assert a.exponent == b.exponent
        assert a.krt == b.krt

    def test_cpr_quantities_frozen(self):
        result = explore(cpr_set())
        assert profile_lengths(result) == {2: 1, 3: 2, 4: 5}
        assert result.exponent.length == 15
        assert witness_replay(cpr_set(), result.exponent.word).is_all_ones()

    def test_kari_profile_frozen_and_cross_checked(self):
        # Frozen regression values, re-derived on every run through the
        # independent automata route (backward subset BFS on both sides).
        from rendezvous import associated_automaton, subset_bfs

        kari = kari_set()
        result = explore(kari, stop_after_profile=True)
        assert profile_lengths(result) == {2: 1, 3: 2, 4: 5, 5: 6, 6: 10}
        aut = subset_bfs(associated_automaton(kari))
        aut_t = subset_bfs(associated_automaton(kari.transposed()))
        for k in range(2, 7):
            assert result.krt[k].length == min(
                aut.krt_length(k), aut_t.krt_length(k)
            )


class TestWitnessReplay:
    def test_empty_word_is_identity(self):
        assert witness_replay(example_set(), ()) == BoolMatrix.identity(3)

    def test_left_to_right_order(self):
        ex = example_set()
        a, b = ex.generators
        assert witness_replay(ex, (0, 1)) == a @ b
        assert witness_replay(ex, (1, 0)) == b @ a

    def test_out_of_range_rejected(self):
        with pytest.raises(ValueError):
            witness_replay(example_set(), (0, 2))


class TestSandwichInvariant:
    def test_exponent_between_reset_thresholds(self):
        # Checked exactly on the builtin example: 2 <= 7 <= 2 + 3 + 3 - 1.
        from rendezvous import associated_automaton, subset_bfs

        ex = example_set()
        exp = explore(ex).exponent.length
        rt = subset_bfs(associated_automaton(ex)).reset_threshold
        rt_t = subset_bfs(associated_automaton(ex.transposed())).reset_threshold
        assert rt <= exp <= rt + rt_t + ex.n - 1
        assert (rt, exp, rt_t) == (2, 7, 3)

    def test_sandwich_on_random_primitive_sets(self):
        from rendezvous import associated_automaton, subset_bfs

        rng = random.Random(24)
        for _ in range(25):
            mset = random_primitive_set(rng, rng.randint(2, 4), 2)
            exp = explore(mset).exponent.length
            rt = subset_bfs(associated_automaton(mset)).reset_threshold
            rt_t = subset_bfs(
                associated_automaton(mset.transposed())
            ).reset_threshold
            assert rt <= exp <= rt + rt_t + mset.n - 1
