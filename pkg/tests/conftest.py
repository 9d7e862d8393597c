"""Shared fixtures: the corpus of diagram files and seeded word generators.

Randomized checks use random.Random with fixed seeds so failures are
reproducible from the test name alone.
"""

import random
from pathlib import Path

import pytest

from stringlinks import MorseWord, from_braid_word, parse_morse, trace
from stringlinks.diagram import is_crossing

CORPUS_DIR = Path(__file__).resolve().parent.parent / "corpus"

_INVERSE_REALIZATION = {
    # body permutation -> positive braid word realizing its inverse
    (1, 2, 3): [],
    (2, 1, 3): [1],
    (1, 3, 2): [2],
    (2, 3, 1): [1, 2],
    (3, 1, 2): [2, 1],
    (3, 2, 1): [1, 2, 1],
}


def corpus_paths():
    paths = sorted(CORPUS_DIR.glob("*.sl"))
    assert paths, "corpus directory is empty"
    return paths


def load(path: Path) -> MorseWord:
    return parse_morse(path.read_text())


def corpus_words():
    return [(path.name, load(path)) for path in corpus_paths()]


def pure_corpus_words():
    return [(name, word) for name, word in corpus_words() if trace(word).is_pure]


def braid_corpus_words():
    return [
        (name, word)
        for name, word in corpus_words()
        if all(is_crossing(ev) for ev in word.events)
    ]


def random_pure_braids(count: int, seed: int, max_len: int = 8):
    """Pure 3-strand braid words of length <= max_len.

    A random signed word is closed up by a positive word realizing the
    inverse of its permutation, so the result is always pure.
    """
    rng = random.Random(seed)
    words = []
    while len(words) < count:
        body_len = rng.randint(1, max_len - 3)
        gens = [rng.choice([1, 2]) * rng.choice([1, -1]) for _ in range(body_len)]
        perm = trace(from_braid_word(3, gens)).perm
        tail = _INVERSE_REALIZATION[tuple(perm)]
        if body_len + len(tail) > max_len:
            continue
        words.append(from_braid_word(3, gens + tail))
    return words


@pytest.fixture(scope="session")
def corpus():
    return corpus_words()


@pytest.fixture(scope="session")
def pure_corpus():
    return pure_corpus_words()


@pytest.fixture(scope="session")
def braid_corpus():
    return braid_corpus_words()
