"""Truncated Taylor expansions and finite-type vanishing."""

from fractions import Fraction

import pytest

from stringlinks import (
    VerificationError,
    add_kink,
    alternating_sum,
    from_braid_word,
    stack,
    taylor_gassner,
)

from conftest import pure_corpus_words, random_pure_braids


def hopf():
    return from_braid_word(2, [1, 1])


class TestTaylorExpansion:
    def test_hopf_order_two_frozen(self):
        series = taylor_gassner(hopf(), 2)
        # entry (1,1): 1 - z2
        assert series[0, 0].coefficient((0, 0)) == 1
        assert series[0, 0].coefficient((0, 1)) == -1
        assert series[0, 0].coefficient((1, 0)) == 0
        # entry (1,2): z1
        assert series[0, 1].coefficient((1, 0)) == 1
        assert series[0, 1].coefficient((0, 0)) == 0
        # entry (2,1): z2 - z2^2
        assert series[1, 0].coefficient((0, 1)) == 1
        assert series[1, 0].coefficient((0, 2)) == -1
        # entry (2,2): 1 - z1 + z1 z2
        assert series[1, 1].coefficient((0, 0)) == 1
        assert series[1, 1].coefficient((1, 0)) == -1
        assert series[1, 1].coefficient((1, 1)) == 1

    def test_linking_number_coefficient(self):
        series = taylor_gassner(hopf(), 1)
        assert series[0, 1].coefficient((1, 0)) == 1

    def test_constant_term_is_identity_on_pure_corpus(self):
        for name, word in pure_corpus_words():
            series = taylor_gassner(word, 1)
            n = series.n
            for i in range(n):
                for j in range(n):
                    expected = 1 if i == j else 0
                    zero = (0,) * series.num_vars
                    assert series[i, j].coefficient(zero) == expected, name

    def test_trivial_expansion(self):
        series = taylor_gassner(from_braid_word(2, []), 3)
        assert series[0, 1].is_zero()
        assert series[0, 0].coefficient((0, 0)) == 1
        assert series[0, 0].coefficient((1, 0)) == 0

    def test_multiplicativity_truncated(self):
        words = random_pure_braids(4, seed=23)
        for a, b in zip(words[::2], words[1::2]):
            left = taylor_gassner(stack(a, b), 3)
            right = taylor_gassner(a, 3) * taylor_gassner(b, 3)
            assert (left - right).is_zero()


class TestAlternatingSums:
    def test_order_one_on_hopf(self):
        series = alternating_sum(hopf(), [1], 3)
        assert series.vanishes_below(1)
        assert series.min_total_degree() == 1

    def test_order_two(self):
        word = from_braid_word(2, [1, 1, 1, 1])
        series = alternating_sum(word, [1, 3], 4)
        assert series.vanishes_below(2)
        assert series.min_total_degree() == 2

    def test_order_three(self):
        word = from_braid_word(2, [1, 1, 1, 1])
        series = alternating_sum(word, [1, 2, 3], 5)
        assert series.vanishes_below(3)
        assert series.min_total_degree() == 3

    def test_kink_flip_vanishes_identically(self):
        # flipping a kink crossing changes nothing up to isotopy
        word = add_kink(from_braid_word(1, []), 1)
        crossing = next(
            i + 1 for i, ev in enumerate(word.events)
            if type(ev).__name__.startswith("Cross")
        )
        series = alternating_sum(word, [crossing], 4)
        assert series.is_zero()

    def test_duplicate_indices_rejected(self):
        with pytest.raises(VerificationError):
            alternating_sum(hopf(), [1, 1], 3)

    def test_non_crossing_index_rejected(self):
        word = add_kink(from_braid_word(1, []), 1)
        cup_index = next(
            i + 1 for i, ev in enumerate(word.events)
            if not type(ev).__name__.startswith("Cross")
        )
        with pytest.raises(VerificationError):
            alternating_sum(word, [cup_index], 3)

    def test_out_of_range_index_rejected(self):
        with pytest.raises(VerificationError):
            alternating_sum(hopf(), [9], 3)
