"""Wirtinger presentations and Fox differentiation."""

import pytest

from stringlinks import (
    LaurentPoly,
    VerificationError,
    from_braid_word,
    trace,
)
from stringlinks.wirtinger import check_augmentation, fox_matrix, presentation

from conftest import corpus_words


def full_fox(word):
    return fox_matrix(presentation(trace(word)))


def test_generator_and_relator_counts():
    # one relator per crossing; the generators are the arcs, c + n of them
    word = from_braid_word(2, [1, 1])
    pres = presentation(trace(word))
    assert pres.n == 2
    assert pres.c == 2
    assert len(pres.relators) == pres.c
    assert len(pres.generators) == pres.c + pres.n


def test_relator_abelianization_is_trivial():
    # a relator's total exponent on each color must vanish
    for name, word in corpus_words():
        pres = presentation(trace(word))
        for rel in pres.relators:
            weights = {}
            for g, e in rel:
                color = pres.generators[g].color
                weights[color] = weights.get(color, 0) + e
            assert all(v == 0 for v in weights.values()), name


def test_fundamental_fox_identity_rowwise():
    # sum over columns of entry * (t_color - 1) equals augment(relator) - 1 = 0
    for name, word in corpus_words():
        F = full_fox(word)
        full = F.A.hstack(F.B).hstack(F.C)
        nv = F.num_vars
        for i in range(full.rows):
            acc = None
            for j in range(full.cols):
                factor = LaurentPoly.var(nv, F.column_colors[j] - 1) - LaurentPoly.one(nv)
                term = full[i, j] * type(full[i, j])(factor)
                acc = term if acc is None else acc + term
            assert acc.is_zero(), (name, i)


def test_block_shapes():
    # s1 s2 s1 has 3 crossings plus one auto-added kink for the strand
    # that never passes under, so c = 4
    word = from_braid_word(3, [1, 2, 1])
    F = full_fox(word)
    assert F.c == 4
    assert F.A.rows == F.c and F.A.cols == F.n
    assert F.B.rows == F.c and F.B.cols == F.c - F.n
    assert F.C.rows == F.c and F.C.cols == F.n
    assert len(F.column_colors) == F.n + (F.c - F.n) + F.n


def test_augmentation_is_unit_on_corpus():
    for name, word in corpus_words():
        assert check_augmentation(full_fox(word)) in (+1, -1), name


def test_column_colors_split_consistently():
    word = from_braid_word(2, [1, 1])
    F = full_fox(word)
    # mu and mu' columns carry the bottom and top strand colors
    assert F.column_colors[: F.n] == F.bottom_colors
    assert F.column_colors[F.n + (F.c - F.n):] == F.top_colors
