"""Closure matrices, torsion, Alexander polynomials, and their identities."""

import random

import pytest

from stringlinks import (
    LaurentPoly,
    RatFunc,
    RatMatrix,
    add_twist,
    alexander_function,
    alexander_poly_closure,
    burau,
    closure_matrix,
    det,
    equal_up_to_units,
    factorization_identity,
    fox_of_word,
    from_braid_word,
    full_report,
    full_twist_braid_word,
    gassner,
    ideal_rank_check,
    knot_closure_relation,
    normalize_unit,
    parse_poly,
    parse_ratfunc,
    reduce,
    torsion,
)

from conftest import braid_corpus_words, corpus_words, pure_corpus_words


def hopf():
    return from_braid_word(2, [1, 1])


class TestEqualUpToUnits:
    def test_monomial_units_absorbed(self):
        a = parse_poly("t1", 2)
        b = parse_poly("-t1*t2^3", 2)
        assert equal_up_to_units(a, b)
        assert not equal_up_to_units(a, parse_poly("1 + t1", 2))

    def test_zero_only_equals_zero(self):
        zero = LaurentPoly.zero(2)
        assert equal_up_to_units(zero, zero)
        assert not equal_up_to_units(zero, parse_poly("t1", 2))


class TestClosureMatrix:
    def test_weight_vector_annihilated(self):
        # V w = 0 with w_j = 1 - t_{color(j)} is checked on construction
        for name, word in corpus_words():
            V = closure_matrix(fox_of_word(word))
            assert V.V.rows == V.c and V.V.cols == V.c, name

    def test_factorization_residual_zero_on_samples(self):
        for gens, n in (([1, 1], 2), ([1, -2], 3), ([1, 2, 1], 3)):
            word = from_braid_word(n, gens)
            residual = factorization_identity(fox_of_word(word), gassner(word))
            assert residual.is_zero(), gens

    def test_residual_zero_with_cups_and_caps(self):
        word = add_twist(hopf(), 1)
        residual = factorization_identity(fox_of_word(word), gassner(word))
        assert residual.is_zero()


class TestTorsion:
    def test_torsion_of_braids_is_a_unit(self):
        for name, word in braid_corpus_words():
            tau = torsion(fox_of_word(word))
            assert normalize_unit(tau) == LaurentPoly.one(tau.num_vars), name

    def test_twisted_hopf_torsion(self):
        tau = torsion(fox_of_word(add_twist(hopf(), 1)))
        assert normalize_unit(tau) == normalize_unit(parse_poly("t2 + t1 - t1*t2", 2))


class TestAlexanderFunction:
    def test_hopf_link_function(self):
        assert alexander_function(gassner(hopf())) == parse_ratfunc("t1*t2", 2)

    def test_closure_polynomial_of_hopf(self):
        V = closure_matrix(fox_of_word(hopf()))
        delta = alexander_poly_closure(V)
        assert normalize_unit(delta) == LaurentPoly.one(2)

    def test_closure_polynomial_rng_independent(self):
        V = closure_matrix(fox_of_word(from_braid_word(2, [1, 1, 1, 1])))
        a = alexander_poly_closure(V, rng=random.Random(1))
        b = alexander_poly_closure(V, rng=random.Random(999))
        assert a == b

    def test_minor_choice_invariance(self):
        # the normalized quotient det(V(i,j))/(1 - t_col(j)) over several
        # random minors; three pairs checked inside, assert stability
        words = [hopf(), from_braid_word(2, [1, 1, 1, 1]),
                 from_braid_word(3, [1, 1, 2, 2])]
        for word in words:
            V = closure_matrix(fox_of_word(word))
            values = [
                alexander_poly_closure(V, spot_checks=3, rng=random.Random(s))
                for s in (5, 6, 7)
            ]
            assert values[0] == values[1] == values[2]


class TestFullReport:
    def test_hopf_report(self):
        report = full_report(hopf())
        assert report.pure
        assert normalize_unit(report.tau) == LaurentPoly.one(2)
        assert normalize_unit(report.delta_closure) == LaurentPoly.one(2)
        assert report.delta_link == parse_ratfunc("t1*t2", 2)
        assert report.delta_closure_one == normalize_unit(parse_poly("1 - t", 1, ["t"]))
        assert report.multi_factorization_ok
        assert report.one_factorization_ok
        assert report.decomposition_residual_zero

    def test_trefoil_closure_is_one_variable_only(self):
        report = full_report(from_braid_word(2, [1, 1, 1]))
        assert not report.pure
        # knot closures have no multi-variable closure polynomial
        assert report.delta_closure is None
        assert report.delta_closure_one == normalize_unit(
            parse_poly("1 - t + t^2", 1, ["t"])
        )
        assert report.one_factorization_ok

    def test_unlink_report_accepts_zero(self):
        report = full_report(from_braid_word(2, []))
        assert report.delta_closure is not None
        assert report.delta_closure.is_zero()
        assert report.multi_factorization_ok
        assert report.one_factorization_ok

    def test_twisted_hopf_keeps_closure_polynomial(self):
        report = full_report(add_twist(hopf(), 1))
        assert normalize_unit(report.delta_closure) == LaurentPoly.one(2)
        assert report.multi_factorization_ok


class TestKnotClosure:
    def test_golden_hopf_with_sigma1(self):
        check = knot_closure_relation(hopf(), [1])
        assert check.ok and not check.degenerate
        assert check.lhs == normalize_unit(parse_poly("1 - t", 1, ["t"]))
        assert check.rhs_closure == normalize_unit(parse_poly("1 - t + t^2", 1, ["t"]))

    def test_default_braid(self):
        check = knot_closure_relation(hopf())
        assert check.ok and not check.degenerate

    def test_degenerate_reported_not_decided(self):
        check = knot_closure_relation(from_braid_word(2, []), [])
        assert check.degenerate
        assert check.ok is None

    def test_zero_sides_agree_without_degeneracy(self):
        check = knot_closure_relation(from_braid_word(2, []), [1])
        assert check.ok and not check.degenerate
        assert check.lhs.is_zero() and check.correction_num.is_zero()

    def test_correction_identity_values(self):
        # (1 - t)(1 + t^3) = (1 - t + t^2)(1 - t^2) exactly
        check = knot_closure_relation(hopf(), [1])
        lhs = RatFunc(check.lhs) * check.correction_den
        rhs = RatFunc(check.rhs_closure) * check.correction_num
        assert equal_up_to_units(lhs, rhs)


class TestReducedFormIdentities:
    def test_multi_variable_version_on_pure_words(self):
        for gens, n in (([1, 1], 2), ([1, 1, 1, 1], 2), ([1, 1, 2, 2], 3)):
            word = from_braid_word(n, gens)
            g = gassner(word)
            nv = g.num_vars
            gt = reduce(g).entries
            I = RatMatrix.identity(nv, g.n - 1)
            num = det(I - gt)
            den = RatFunc(LaurentPoly.monomial(nv, (-1,) * nv)) - RatFunc.one(nv)
            rhs = num / den
            lhs = alexander_function(g)
            assert lhs == rhs or lhs == -rhs, gens

    def test_one_variable_version_on_any_words(self):
        # t det((I - burau)(11)) * (t^-1 + ... + t^-n) = det(I - reduced burau)
        for gens, n in (([1], 2), ([1, 1, 1], 2), ([1, -2], 3), ([1, 2, 1], 3)):
            word = from_braid_word(n, gens)
            b = burau(word)
            I = RatMatrix.identity(1, n)
            t = RatFunc(LaurentPoly.var(1, 0))
            lhs = t * det((I - b).minor_matrix(0, 0))
            geom = None
            for k in range(1, n + 1):
                term = RatFunc(LaurentPoly.var(1, 0, -k))
                geom = term if geom is None else geom + term
            bt = reduce(b).entries
            rhs = det(RatMatrix.identity(1, n - 1) - bt)
            assert lhs * geom == rhs, gens


class TestIdealRank:
    def test_spot_instances(self):
        for word in (from_braid_word(2, []), hopf(), full_twist_braid_word(3)):
            V = closure_matrix(fox_of_word(word))
            g = gassner(word)
            for k in range(word.n + 1):
                assert ideal_rank_check(V, g, k), (word.n, k)

    def test_oversized_k_rejected(self):
        word = hopf()
        V = closure_matrix(fox_of_word(word))
        with pytest.raises(Exception):
            ideal_rank_check(V, gassner(word), 5)
