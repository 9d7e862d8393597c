"""Colored matrix invariants: golden values, functoriality, unitarity."""

import cmath

import pytest

from stringlinks import (
    RatFunc,
    RatMatrix,
    VerificationError,
    add_kink,
    burau,
    charpoly_coefficients,
    default_angles,
    det,
    fixes_weight_vectors,
    from_braid_word,
    full_twist,
    full_twist_braid_word,
    gassner,
    invariant_form,
    invert,
    matrix_from_json,
    matrix_to_json,
    numeric_eval,
    parse_ratfunc,
    reduce,
    stack,
    unitary_spectrum_check,
)
from stringlinks.diagram import CrossNeg, CrossPos, MorseWord
from stringlinks.gassner import _star

from conftest import random_pure_braids


def rf(text, nv=2):
    return parse_ratfunc(text, nv)


def hopf():
    return from_braid_word(2, [1, 1])


class TestGoldenValues:
    def test_hopf_matrix(self):
        g = gassner(hopf())
        expected = [
            ["t2", "1 - t1"],
            ["t2 - t2^2", "1 - t2 + t1*t2"],
        ]
        for i in range(2):
            for j in range(2):
                assert g.entries[i, j] == rf(expected[i][j]), (i, j)

    def test_burau_single_generator(self):
        b = burau(from_braid_word(2, [1]))
        expected = [["0", "1"], ["t", "1 - t"]]
        for i in range(2):
            for j in range(2):
                assert b[i, j] == rf(expected[i][j], 1), (i, j)

    def test_reduced_hopf(self):
        gt = reduce(gassner(hopf()))
        assert gt.entries.rows == 1
        assert gt.entries[0, 0] == rf("t1*t2")

    def test_full_twist_closed_form(self):
        for n in (2, 3):
            closed = full_twist(n)
            direct = gassner(full_twist_braid_word(n))
            assert closed.entries == direct.entries, n

    def test_full_twist_single_strand_is_identity(self):
        # one strand has nothing to twist around: the matrix is [1]
        assert full_twist(1).entries == RatMatrix.identity(1, 1)


class TestFunctoriality:
    def test_stacking_multiplicativity_seeded(self):
        words = random_pure_braids(20, seed=101)
        pairs = zip(words[::2], words[1::2])
        for a, b in pairs:
            ab = stack(a, b)
            assert gassner(ab).entries == gassner(a).entries * gassner(b).entries

    def test_reduction_is_multiplicative(self):
        words = random_pure_braids(6, seed=55)
        for a, b in zip(words[::2], words[1::2]):
            left = reduce(gassner(stack(a, b))).entries
            right = reduce(gassner(a)).entries * reduce(gassner(b)).entries
            assert left == right

    def test_concordance_inverse_gives_identity(self):
        for gens in ([1], [1, 2], [1, -2, 1], [2, 2, 1]):
            word = from_braid_word(3, gens)
            doubled = stack(word, invert(word))
            g = gassner(doubled)
            assert g.entries == RatMatrix.identity(g.num_vars, g.n), gens

    def test_braid_relation(self):
        left = gassner(from_braid_word(3, [1, 2, 1]))
        right = gassner(from_braid_word(3, [2, 1, 2]))
        assert left.entries == right.entries

    def test_distant_generators_commute(self):
        left = gassner(from_braid_word(4, [1, 3]))
        right = gassner(from_braid_word(4, [3, 1]))
        assert left.entries == right.entries


class TestInvariance:
    def test_kink_invariance(self):
        word = hopf()
        for strand in (1, 2):
            assert gassner(add_kink(word, strand)).entries == gassner(word).entries

    def test_cancelling_pair_invariance(self):
        word = from_braid_word(2, [1, -1])
        g = gassner(word)
        assert g.entries == RatMatrix.identity(g.num_vars, 2)

    def test_weight_vectors_on_seeded_words(self):
        for word in random_pure_braids(10, seed=77):
            assert fixes_weight_vectors(gassner(word)) == (True, True)

    def test_trace_drops_by_one_under_reduction(self):
        g = gassner(hopf())
        gt = reduce(g)
        tr_full = g.entries[0, 0] + g.entries[1, 1]
        assert tr_full == gt.entries[0, 0] + RatFunc.one(2)


class TestOneVariable:
    def test_burau_is_collapsed_gassner_for_pure_words(self):
        for word in random_pure_braids(5, seed=9):
            g = gassner(word)
            b = burau(word)
            for i in range(g.n):
                for j in range(g.n):
                    assert g.entries[i, j].collapse_vars() == b[i, j]


class TestNumeric:
    def test_numeric_eval_matches_symbolic_substitution(self):
        g = gassner(hopf())
        angles = [0.11, 0.07]
        M = numeric_eval(g, angles)
        t1 = cmath.exp(2j * cmath.pi * angles[0])
        t2 = cmath.exp(2j * cmath.pi * angles[1])
        assert abs(M[0][0] - t2) < 1e-12
        assert abs(M[0][1] - (1 - t1)) < 1e-12
        assert abs(M[1][0] - (1 - t2) * t2) < 1e-12

    def test_unit_spectrum_for_pure_words(self):
        for word in random_pure_braids(5, seed=13):
            report = unitary_spectrum_check(reduce(gassner(word)))
            assert report.ok
            assert report.max_deviation < 1e-8

    def test_angles_outside_wedge_can_break_unitarity(self):
        # reduced matrix of s1 s2^-1 at t = -1 has eigenvalues
        # (3 +- sqrt(5))/2; the deviation is the golden ratio
        word = from_braid_word(3, [1, -2])
        report = unitary_spectrum_check(reduce(gassner(word)), angles=[0.5])
        assert not report.ok
        assert abs(report.max_deviation - 1.6180339887) < 1e-6

    def test_charpoly_matches_direct_determinant(self):
        M = gassner(hopf()).entries
        coeffs = charpoly_coefficients(M)
        assert len(coeffs) == 3
        assert coeffs[2] == RatFunc.const(2, 1)
        assert coeffs[0] == det(M)
        x = RatFunc.const(2, 3)
        shifted = M - RatMatrix.identity(2, 2).map(lambda e: e * x)
        assert coeffs[0] + coeffs[1] * x + coeffs[2] * x * x == det(shifted)


class TestInvariantForm:
    def test_two_strand_form(self):
        samples = [hopf(), from_braid_word(2, [1, 1, 1, 1])]
        form = invariant_form(2, samples)
        J = form.J
        assert J.rows == 1 and J.cols == 1
        assert not J[0, 0].is_zero()
        # skew-hermitian under the bar involution
        assert _star(J) == J.map(lambda e: -e)

    def test_three_strand_form_held_out(self):
        samples = [
            from_braid_word(3, [1, 1]),
            from_braid_word(3, [2, 2]),
            from_braid_word(3, [2, 1, 1, -2]),
        ]
        form = invariant_form(3, samples)
        J = form.J
        for word in random_pure_braids(4, seed=31):
            gt = reduce(gassner(word)).entries
            assert _star(gt) * J * gt == J


class TestSerialization:
    def test_matrix_json_round_trip(self):
        g = gassner(hopf())
        again = matrix_from_json(matrix_to_json(g))
        assert again == g.entries

    def test_reduced_json_round_trip(self):
        gt = reduce(gassner(from_braid_word(3, [1, 1, 2, 2])))
        assert matrix_from_json(matrix_to_json(gt)) == gt.entries


class TestValidation:
    def test_color_mismatch_rejected(self):
        # closure colors must be constant on permutation cycles
        from stringlinks import MorseError
        word = MorseWord(2, (1, 2), (CrossPos(1),))
        with pytest.raises(MorseError):
            gassner(word)
