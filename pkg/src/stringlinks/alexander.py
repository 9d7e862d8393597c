"""Closure Alexander matrices, string-link torsion, and the factorization
identities connecting them.

Identifying each top meridian generator with its bottom partner turns the
Wirtinger-Fox blocks (A B C) into the square closure matrix V = (A+C B).
Minors of V give the multivariable Alexander polynomial of the closure;
det(A B) is the torsion tau(L); and the two are tied to the Gassner
matrix by

    Delta_closure  =  tau(L) * Delta_L        (up to units)

with Delta_L computed from minors of I - gamma(L).  Every identity here
is checked exactly over the rational function field.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from .algebra import (
    LaurentPoly,
    RatFunc,
    RatMatrix,
    VerificationError,
    augment,
    det,
    normalize_unit,
    rank,
)
from .diagram import MorseWord, from_braid_word, trace
from .gassner import GassnerMatrix, burau, fox_of_word, gassner, reduce
from .wirtinger import FoxMatrix


@dataclass(frozen=True)
class ClosureMatrix:
    """V = (A+C B), square of size c, with the color of each column."""

    n: int
    c: int
    num_vars: int
    V: RatMatrix
    column_colors: Tuple[int, ...]


@dataclass(frozen=True)
class AlexReport:
    """All Alexander-type invariants of one word, with the exact checks."""

    n: int
    num_vars: int
    pure: bool
    tau: LaurentPoly
    delta_closure: Optional[LaurentPoly]
    delta_link: Optional[RatFunc]
    tau_one: LaurentPoly
    delta_closure_one: LaurentPoly
    delta_link_one: RatFunc
    multi_factorization_ok: Optional[bool]
    one_factorization_ok: bool
    decomposition_residual_zero: bool

    def to_json(self) -> dict:
        from .algebra import default_var_names

        names = default_var_names(self.num_vars)
        one = ("t",)

        def text(p, nm):
            return None if p is None else p.to_text(nm)

        return {
            "n": self.n,
            "vars": list(names),
            "pure": self.pure,
            "tau": text(self.tau, names),
            "delta_closure": text(self.delta_closure, names),
            "delta_link": text(
                None if self.delta_link is None else self.delta_link.reduced(), names
            ),
            "tau_one": text(self.tau_one, one),
            "delta_closure_one": text(self.delta_closure_one, one),
            "delta_link_one": text(self.delta_link_one.reduced(), one),
            "multi_factorization_ok": self.multi_factorization_ok,
            "one_factorization_ok": self.one_factorization_ok,
            "decomposition_residual_zero": self.decomposition_residual_zero,
        }

    def table(self) -> str:
        data = self.to_json()
        rows = [
            ("strands", str(self.n)),
            ("pure", str(self.pure)),
            ("tau", data["tau"]),
            ("Delta_closure", str(data["delta_closure"])),
            ("Delta_link", str(data["delta_link"])),
            ("tau (one var)", data["tau_one"]),
            ("Delta_closure (one var)", data["delta_closure_one"]),
            ("Delta_link (one var)", data["delta_link_one"]),
            ("closure = tau * link (multi)", str(self.multi_factorization_ok)),
            ("closure = tau * link (one var)", str(self.one_factorization_ok)),
            ("(A B) decomposition residual zero", str(self.decomposition_residual_zero)),
        ]
        width = max(len(k) for k, _ in rows)
        return "\n".join("%-*s  %s" % (width, k, v) for k, v in rows)


@dataclass(frozen=True)
class KnotClosureCheck:
    """Outcome of the link-closure vs knot-closure polynomial relation."""

    ok: Optional[bool]
    degenerate: bool
    lhs: LaurentPoly
    rhs_closure: LaurentPoly
    correction_num: RatFunc
    correction_den: RatFunc


def _as_laurent(r: RatFunc, what: str) -> LaurentPoly:
    """Certify that a rational function is a Laurent polynomial."""
    red = r.reduced()
    den = red.den
    if len(den.terms) != 1:
        raise VerificationError("%s is not a Laurent polynomial: %s" % (what, red))
    (exps, coeff), = den.terms.items()
    inv = LaurentPoly(
        den.num_vars, {tuple(-e for e in exps): 1 / coeff}
    )
    return red.num * inv


def equal_up_to_units(a, b) -> bool:
    """Equality modulo multiplication by +-(monomial)."""
    ra = a if isinstance(a, RatFunc) else RatFunc(a)
    rb = b if isinstance(b, RatFunc) else RatFunc(b)
    lhs = ra.num * rb.den
    rhs = rb.num * ra.den
    if lhs.is_zero() or rhs.is_zero():
        return lhs.is_zero() and rhs.is_zero()
    return normalize_unit(lhs) == normalize_unit(rhs)


def closure_matrix(F: FoxMatrix) -> ClosureMatrix:
    """Identify top with bottom meridians: V = (A+C B).

    Requires the closure to make sense color-wise.  The row space of V
    annihilates the weight vector w with w_j = 1 - t_{alpha(j)}; this is
    checked on the spot.
    """
    if F.bottom_colors != F.top_colors:
        raise VerificationError(
            "closure undefined: bottom colors %s != top colors %s"
            % (F.bottom_colors, F.top_colors)
        )
    V = (F.A + F.C).hstack(F.B)
    column_colors = F.column_colors[: F.c]
    nv = F.num_vars
    one = LaurentPoly.one(nv)
    w = [RatFunc(one - LaurentPoly.var(nv, col - 1)) for col in column_colors]
    for i in range(F.c):
        total = RatFunc.zero(nv)
        for j in range(F.c):
            total = total + V[i, j] * w[j]
        if not total.is_zero():
            raise VerificationError("closure matrix does not annihilate w")
    return ClosureMatrix(F.n, F.c, nv, V, column_colors)


def factorization_identity(F: FoxMatrix, g: GassnerMatrix) -> RatMatrix:
    """Residual of V = (A B) * [[I - gamma, 0], [-Z, I]]; zero when exact."""
    if g.Z is None:
        raise VerificationError("gassner matrix carries no Z block")
    n, c, nv = F.n, F.c, F.num_vars
    V = (F.A + F.C).hstack(F.B)
    AB = F.A.hstack(F.B)
    block = RatMatrix.identity(nv, n) - g.entries
    if c > n:
        block = block.hstack(RatMatrix.zero(nv, n, c - n)).vstack(
            (-g.Z).hstack(RatMatrix.identity(nv, c - n))
        )
    return V - AB * block


def alexander_poly_closure(
    V: ClosureMatrix, spot_checks: int = 3, rng: Optional[random.Random] = None
) -> LaurentPoly:
    """det(V(i,j)) / (1 - t_{alpha(j)}), unit-normalized.

    The quotient is independent of (i, j) up to units; a few pairs are
    recomputed and compared to certify that on every call.
    """
    if V.n < 2:
        raise VerificationError("multivariable closure polynomial needs n >= 2")
    c, nv = V.c, V.num_vars
    if rank(V.V) < c - 1:
        return LaurentPoly.zero(nv)
    rng = rng or random.Random(20260814)

    def quotient(i: int, j: int) -> LaurentPoly:
        minor = det(V.V.minor_matrix(i, j))
        w = RatFunc(
            LaurentPoly.one(nv) - LaurentPoly.var(nv, V.column_colors[j] - 1)
        )
        return _as_laurent(minor * w.inverse(), "closure polynomial")

    base = normalize_unit(quotient(0, 0))
    pairs = {(0, 0)}
    while len(pairs) < min(spot_checks + 1, c * c):
        pairs.add((rng.randrange(c), rng.randrange(c)))
    for i, j in sorted(pairs - {(0, 0)}):
        if normalize_unit(quotient(i, j)) != base:
            raise VerificationError(
                "closure polynomial depends on the deleted row/column (%d,%d)"
                % (i + 1, j + 1)
            )
    return base


def alexander_function(g: GassnerMatrix) -> RatFunc:
    """(-1)^{i+j} (t_1...t_i) det((I - gamma)(i,j)) / (1 - t_j).

    Exactly independent of the pair (i, j); computed at (1,1) and
    cross-checked at a second pair.
    """
    n, nv = g.n, g.num_vars
    if n < 2:
        raise VerificationError("link Alexander function needs n >= 2")
    I = RatMatrix.identity(nv, n)
    M = I - g.entries

    def value(i: int, j: int) -> RatFunc:
        prefix = LaurentPoly.one(nv)
        for m in range(i + 1):
            prefix = prefix * LaurentPoly.var(nv, g.colors[m] - 1)
        w = RatFunc(
            LaurentPoly.one(nv) - LaurentPoly.var(nv, g.colors[j] - 1)
        )
        sign = LaurentPoly.const(nv, (-1) ** (i + j))
        return RatFunc(sign * prefix) * det(M.minor_matrix(i, j)) * w.inverse()

    result = value(0, 0)
    if value(1, 0) != result:
        raise VerificationError("link Alexander function is not minor-independent")
    return result


def torsion(F: FoxMatrix) -> LaurentPoly:
    """det(A B): the torsion of the string link, unit-normalized."""
    d = det(F.A.hstack(F.B))
    tau = _as_laurent(d, "torsion")
    if abs(augment(tau)) != 1:
        raise VerificationError("torsion augments to %s, not +-1" % augment(tau))
    return normalize_unit(tau)


def _one_var_closure(V: ClosureMatrix) -> LaurentPoly:
    """det of the (1,1) minor of V with every variable collapsed to t."""
    collapsed = RatMatrix(
        1,
        [[V.V[i, j].collapse_vars() for j in range(V.c)] for i in range(V.c)],
    )
    minor = det(collapsed.minor_matrix(0, 0))
    p = _as_laurent(minor, "one-variable closure polynomial")
    return normalize_unit(p)


def _one_var_link(word: MorseWord) -> RatFunc:
    """t * det((I - burau)(1,1)) in the single variable t."""
    b = burau(word)
    I = RatMatrix.identity(1, b.rows)
    minor = det((I - b).minor_matrix(0, 0))
    return RatFunc(LaurentPoly.var(1, 0)) * minor


def _closure_components(perm: Sequence[int]) -> int:
    seen = [False] * len(perm)
    count = 0
    for start in range(len(perm)):
        if seen[start]:
            continue
        count += 1
        i = start
        while not seen[i]:
            seen[i] = True
            i = perm[i] - 1
    return count


def full_report(L: MorseWord) -> AlexReport:
    diagram = trace(L)
    F = fox_of_word(L)
    V = closure_matrix(F)
    g = gassner(L)
    pure = diagram.is_pure
    nv = F.num_vars

    tau = torsion(F)
    residual = factorization_identity(F, g)
    residual_zero = residual.is_zero()

    # The minor/(1 - t) closure formula is a multi-component statement;
    # it needs >= 2 closure components carrying distinct variables.
    components = _closure_components(diagram.perm)
    faithful = len(set(L.colors)) == components

    delta_closure = None
    delta_link = None
    multi_ok = None
    if components >= 2 and faithful:
        delta_closure = alexander_poly_closure(V)
        if pure:
            delta_link = alexander_function(g)
            multi_ok = equal_up_to_units(
                RatFunc(delta_closure), RatFunc(tau) * delta_link
            )

    tau_one = normalize_unit(
        _as_laurent(RatFunc(tau).collapse_vars(), "one-variable torsion")
    )
    delta_closure_one = _one_var_closure(V)
    delta_link_one = _one_var_link(L)
    one_ok = equal_up_to_units(
        RatFunc(delta_closure_one), RatFunc(tau_one) * delta_link_one
    )

    return AlexReport(
        n=L.n,
        num_vars=nv,
        pure=pure,
        tau=tau,
        delta_closure=delta_closure,
        delta_link=delta_link,
        tau_one=tau_one,
        delta_closure_one=delta_closure_one,
        delta_link_one=delta_link_one,
        multi_factorization_ok=multi_ok,
        one_factorization_ok=one_ok,
        decomposition_residual_zero=residual_zero,
    )


def knot_closure_relation(
    L: MorseWord, B: Optional[Sequence[int]] = None
) -> KnotClosureCheck:
    """Compare the closure polynomial of L with that of L stacked with a
    braid B, through the reduced Burau correction

        Delta(closure of L) * det(I - rb(L) rb(B))
            = Delta(closure of L B) * det(I - rb(L))   (up to units).

    B defaults to the cycle braid s_1 s_2 ... s_{n-1}.  A vanishing
    det(I - rb(L) rb(B)) makes the relation degenerate; that is reported
    rather than decided.
    """
    n = L.n
    if not trace(L).is_pure:
        raise VerificationError("knot-closure relation needs a pure word")
    if B is None:
        B = list(range(1, n))
    B = list(B)

    braid = from_braid_word(n, B) if B else MorseWord(n, L.colors, ())
    lhs = _one_var_closure(closure_matrix(fox_of_word(L)))

    combined = MorseWord(n, braid.colors, tuple(L.events) + tuple(braid.events))
    rhs_closure = _one_var_closure(closure_matrix(fox_of_word(combined)))

    rbL = reduce(burau(L)).entries
    rbB = reduce(burau(braid)).entries
    I = RatMatrix.identity(1, n - 1)
    corr_num = det(I - rbL)
    corr_den = det(I - rbL * rbB)
    if corr_den.is_zero():
        return KnotClosureCheck(None, True, lhs, rhs_closure, corr_num, corr_den)
    ok = equal_up_to_units(RatFunc(lhs) * corr_den, RatFunc(rhs_closure) * corr_num)
    return KnotClosureCheck(ok, False, lhs, rhs_closure, corr_num, corr_den)


def ideal_rank_check(V: ClosureMatrix, g: GassnerMatrix, k: int) -> bool:
    """Vanishing of the k-th Alexander ideal over the function field
    matches eigenvalue-1 multiplicity of gamma exceeding k."""
    if k > V.n:
        raise VerificationError("k exceeds the strand count")
    ideal_vanishes = rank(V.V) < V.c - k
    I = RatMatrix.identity(g.num_vars, g.n)
    multiplicity = g.n - rank(I - g.entries)
    return ideal_vanishes == (multiplicity >= k + 1)
