"""Taylor coefficients of the Gassner matrix at t = 1, and the
finite-type vanishing property of their alternating sums.

Writing t_i = 1 - z_i, every entry of gamma(L) expands as a power
series in the z_i (the denominator augments to +-1, so it is a unit in
the power-series ring).  Flipping a set of k crossings in all 2^k ways
and summing with alternating signs kills every coefficient of total
degree below k; the coefficient functionals are finite-type invariants
of order bounded by their degree.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterable, List, Sequence, Tuple

from .algebra import TruncatedSeries, VerificationError, series_var_names, taylor_expand
from .diagram import CrossNeg, CrossPos, MorseWord, is_crossing
from .gassner import gassner


@dataclass(frozen=True)
class SeriesMatrix:
    """n x n grid of truncated power series with a common bound."""

    n: int
    num_vars: int
    bound: int
    entries: Tuple[Tuple[TruncatedSeries, ...], ...]

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def __add__(self, other: "SeriesMatrix") -> "SeriesMatrix":
        self._check(other)
        return SeriesMatrix(
            self.n, self.num_vars, self.bound,
            tuple(
                tuple(self.entries[i][j] + other.entries[i][j] for j in range(self.n))
                for i in range(self.n)
            ),
        )

    def __sub__(self, other: "SeriesMatrix") -> "SeriesMatrix":
        self._check(other)
        return SeriesMatrix(
            self.n, self.num_vars, self.bound,
            tuple(
                tuple(self.entries[i][j] - other.entries[i][j] for j in range(self.n))
                for i in range(self.n)
            ),
        )

    def __mul__(self, other: "SeriesMatrix") -> "SeriesMatrix":
        self._check(other)
        zero = TruncatedSeries.zero(self.num_vars, self.bound)
        out = []
        for i in range(self.n):
            row = []
            for j in range(self.n):
                acc = zero
                for k in range(self.n):
                    acc = acc + self.entries[i][k] * other.entries[k][j]
                row.append(acc)
            out.append(tuple(row))
        return SeriesMatrix(self.n, self.num_vars, self.bound, tuple(out))

    def _check(self, other: "SeriesMatrix"):
        if (self.n, self.num_vars, self.bound) != (other.n, other.num_vars, other.bound):
            raise VerificationError("series matrix shape/bound mismatch")

    def is_zero(self) -> bool:
        return all(s.is_zero() for row in self.entries for s in row)

    def min_total_degree(self):
        """Smallest total degree appearing anywhere; None when zero."""
        degrees = [
            s.min_total_degree()
            for row in self.entries
            for s in row
            if not s.is_zero()
        ]
        return min(degrees) if degrees else None

    def vanishes_below(self, k: int) -> bool:
        d = self.min_total_degree()
        return d is None or d >= k

    def to_json(self) -> dict:
        names = series_var_names(self.num_vars)
        return {
            "n": self.n,
            "vars": list(names),
            "bound": self.bound,
            "entries": [[s.to_text(names) for s in row] for row in self.entries],
        }


def taylor_gassner(L: MorseWord, N: int) -> SeriesMatrix:
    """Entrywise Taylor expansion of gamma(L) to total degree N."""
    g = gassner(L)
    rows = tuple(
        tuple(taylor_expand(g.entries[i, j], N) for j in range(g.n))
        for i in range(g.n)
    )
    return SeriesMatrix(g.n, g.num_vars, N, rows)


def _with_signs(
    L: MorseWord, indices: Sequence[int], signs: Sequence[int]
) -> MorseWord:
    events: List = list(L.events)
    for idx, sign in zip(indices, signs):
        pos = events[idx - 1].pos
        events[idx - 1] = CrossPos(pos) if sign > 0 else CrossNeg(pos)
    return MorseWord(L.n, L.colors, tuple(events))


def alternating_sum(
    L: MorseWord, crossing_indices: Iterable[int], N: int
) -> SeriesMatrix:
    """Sum of gamma expansions over all sign assignments of the chosen
    crossings, weighted by the parity of positive choices.

    Every coefficient of total degree below the number of flipped
    crossings cancels; the result certifies that order bound.
    """
    indices = list(crossing_indices)
    if len(set(indices)) != len(indices):
        raise VerificationError("crossing indices must be distinct")
    for idx in indices:
        if not 1 <= idx <= len(L.events):
            raise VerificationError("event index %d out of range" % idx)
        if not is_crossing(L.events[idx - 1]):
            raise VerificationError("event %d is not a crossing" % idx)
    k = len(indices)
    total = None
    for signs in product((1, -1), repeat=k):
        term = taylor_gassner(_with_signs(L, indices, signs), N)
        positives = sum(1 for s in signs if s > 0)
        if positives % 2:
            term = SeriesMatrix(
                term.n, term.num_vars, term.bound,
                tuple(tuple(-s for s in row) for row in term.entries),
            )
        total = term if total is None else total + term
    return total
