"""Exact multivariate Laurent-polynomial and rational-function arithmetic.

Everything downstream (representations, Alexander invariants, walk oracles)
runs over the field F = Q(t_1, ..., t_n).  Elements are represented as
fractions of Laurent polynomials with arbitrary-precision rational
coefficients; no floating point enters here.

Conventions:
  * A LaurentPoly is a map from integer exponent vectors to nonzero
    Fractions.  Exponents may be negative.
  * RatFunc fractions are NOT kept GCD-reduced.  Equality is decided by
    cross-multiplication, which is exact and cheap enough at our sizes.
    A lightweight `reduced` pass (exact division, monomial/scalar content,
    univariate GCD) exists for presentation purposes only.
  * Canonical text form orders terms by (total degree, exponent tuple).
  * Determinants clear denominators row by row and run fraction-free
    (Bareiss) elimination on the resulting polynomial matrix, so the
    intermediate swell stays polynomial instead of nested-fraction.
"""

from __future__ import annotations

import re
from fractions import Fraction
from math import gcd
from typing import Mapping, Sequence


class AlgebraError(ValueError):
    """Base class for arithmetic errors raised by this module."""


class ShapeError(AlgebraError):
    """Matrix dimensions are incompatible with the requested operation."""


class SingularMatrixError(AlgebraError):
    """A linear solve met a singular coefficient matrix."""


class PoleError(AlgebraError):
    """Numeric evaluation hit a zero denominator."""


class NotDivisibleError(AlgebraError):
    """Exact polynomial division left a remainder."""


class ParseError(AlgebraError):
    """Canonical-text input could not be parsed."""


class VerificationError(RuntimeError):
    """An identity that must hold for every valid input failed to hold."""


Exponents = tuple


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise AlgebraError(f"coefficient must be int or Fraction, got {type(x).__name__}")


# ============================================================
#  Laurent polynomials
# ============================================================

class LaurentPoly:
    """A Laurent polynomial in `num_vars` variables over Q.

    INPUT terms: mapping exponent-tuple -> coefficient; zero coefficients
    are dropped on construction.  Instances are treated as immutable.
    """

    __slots__ = ("num_vars", "terms", "_hash")

    def __init__(self, num_vars: int, terms: Mapping[Exponents, Fraction] | None = None):
        if num_vars < 0:
            raise AlgebraError("num_vars must be >= 0")
        self.num_vars = num_vars
        clean: dict = {}
        if terms:
            for exps, coeff in terms.items():
                exps = tuple(exps)
                if len(exps) != num_vars:
                    raise AlgebraError(
                        f"exponent vector {exps} has length {len(exps)}, expected {num_vars}")
                coeff = _as_fraction(coeff)
                if coeff != 0:
                    clean[exps] = clean.get(exps, Fraction(0)) + coeff
                    if clean[exps] == 0:
                        del clean[exps]
        self.terms = clean
        self._hash = None

    # ---- constructors ----

    @staticmethod
    def zero(num_vars: int) -> "LaurentPoly":
        return LaurentPoly(num_vars, {})

    @staticmethod
    def one(num_vars: int) -> "LaurentPoly":
        return LaurentPoly(num_vars, {(0,) * num_vars: Fraction(1)})

    @staticmethod
    def const(num_vars: int, c) -> "LaurentPoly":
        return LaurentPoly(num_vars, {(0,) * num_vars: _as_fraction(c)})

    @staticmethod
    def var(num_vars: int, index: int, power: int = 1) -> "LaurentPoly":
        """The monomial t_{index+1}^power (index is 0-based)."""
        if not 0 <= index < num_vars:
            raise AlgebraError(f"variable index {index} out of range for {num_vars} variables")
        exps = [0] * num_vars
        exps[index] = power
        return LaurentPoly(num_vars, {tuple(exps): Fraction(1)})

    @staticmethod
    def monomial(num_vars: int, exps: Sequence[int], coeff=1) -> "LaurentPoly":
        return LaurentPoly(num_vars, {tuple(exps): _as_fraction(coeff)})

    # ---- predicates / simple data ----

    def is_zero(self) -> bool:
        return not self.terms

    def is_one(self) -> bool:
        return self.terms == {(0,) * self.num_vars: Fraction(1)}

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def augment(self) -> Fraction:
        """Evaluation at t_1 = ... = t_n = 1 (the augmentation map)."""
        return sum(self.terms.values(), Fraction(0))

    def constant_coeff(self) -> Fraction:
        return self.terms.get((0,) * self.num_vars, Fraction(0))

    def min_exponents(self) -> Exponents:
        """Componentwise minimum exponent over all terms (poly must be nonzero)."""
        if not self.terms:
            raise AlgebraError("min_exponents of the zero polynomial")
        cols = zip(*self.terms.keys())
        return tuple(min(c) for c in cols)

    def total_degrees(self):
        return [sum(e) for e in self.terms]

    # ---- arithmetic ----

    def _check(self, other: "LaurentPoly"):
        if self.num_vars != other.num_vars:
            raise AlgebraError(
                f"mixed variable counts: {self.num_vars} vs {other.num_vars}")

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        self._check(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, Fraction(0)) + c
            if s == 0:
                out.pop(e, None)
            else:
                out[e] = s
        p = LaurentPoly.__new__(LaurentPoly)
        p.num_vars, p.terms, p._hash = self.num_vars, out, None
        return p

    def __neg__(self) -> "LaurentPoly":
        p = LaurentPoly.__new__(LaurentPoly)
        p.num_vars = self.num_vars
        p.terms = {e: -c for e, c in self.terms.items()}
        p._hash = None
        return p

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-other)

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        self._check(other)
        a, b = self.terms, other.terms
        if len(a) > len(b):
            a, b = b, a
        out: dict = {}
        for ea, ca in a.items():
            for eb, cb in b.items():
                e = tuple(x + y for x, y in zip(ea, eb))
                s = out.get(e, Fraction(0)) + ca * cb
                if s == 0:
                    out.pop(e, None)
                else:
                    out[e] = s
        p = LaurentPoly.__new__(LaurentPoly)
        p.num_vars, p.terms, p._hash = self.num_vars, out, None
        return p

    def scale(self, c) -> "LaurentPoly":
        c = _as_fraction(c)
        if c == 0:
            return LaurentPoly.zero(self.num_vars)
        p = LaurentPoly.__new__(LaurentPoly)
        p.num_vars = self.num_vars
        p.terms = {e: cc * c for e, cc in self.terms.items()}
        p._hash = None
        return p

    def __pow__(self, k: int) -> "LaurentPoly":
        if k < 0:
            if not self.is_monomial():
                raise AlgebraError("negative powers only defined for monomials")
            ((e, c),) = self.terms.items()
            return LaurentPoly(self.num_vars, {tuple(x * k for x in e): c ** k})
        result = LaurentPoly.one(self.num_vars)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def shift(self, exps: Sequence[int]) -> "LaurentPoly":
        """Multiply by the monomial t^exps."""
        exps = tuple(exps)
        p = LaurentPoly.__new__(LaurentPoly)
        p.num_vars = self.num_vars
        p.terms = {tuple(x + y for x, y in zip(e, exps)): c for e, c in self.terms.items()}
        p._hash = None
        return p

    def bar(self) -> "LaurentPoly":
        """The bar involution t_i -> t_i^-1 (negate all exponents)."""
        p = LaurentPoly.__new__(LaurentPoly)
        p.num_vars = self.num_vars
        p.terms = {tuple(-x for x in e): c for e, c in self.terms.items()}
        p._hash = None
        return p

    def permute_vars(self, perm: Sequence[int]) -> "LaurentPoly":
        """Relabel variables: new variable i carries the old exponent of perm[i].

        perm is a 0-based permutation of range(num_vars).
        """
        if sorted(perm) != list(range(self.num_vars)):
            raise AlgebraError("perm must be a permutation of the variable indices")
        p = LaurentPoly.__new__(LaurentPoly)
        p.num_vars = self.num_vars
        p.terms = {tuple(e[perm[i]] for i in range(self.num_vars)): c
                   for e, c in self.terms.items()}
        p._hash = None
        return p

    def collapse_vars(self) -> "LaurentPoly":
        """Specialize all variables to a single one: t_i -> t."""
        out: dict = {}
        for e, c in self.terms.items():
            k = (sum(e),)
            s = out.get(k, Fraction(0)) + c
            if s == 0:
                out.pop(k, None)
            else:
                out[k] = s
        p = LaurentPoly.__new__(LaurentPoly)
        p.num_vars, p.terms, p._hash = 1, out, None
        return p

    def eval_complex(self, point: Sequence[complex]) -> complex:
        if len(point) != self.num_vars:
            raise AlgebraError("evaluation point has wrong arity")
        total = 0j
        for e, c in self.terms.items():
            v = complex(c)
            for x, k in zip(point, e):
                v *= x ** k
            total += v
        return total

    # ---- exact division ----

    def exact_div(self, other: "LaurentPoly") -> "LaurentPoly":
        """Exact division in the Laurent ring; raises NotDivisibleError on failure.

        Strategy: strip monomial content from both operands (min exponents are
        additive over a domain), then run single-divisor graded-lex division in
        the ordinary polynomial ring.
        """
        self._check(other)
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        if self.is_zero():
            return LaurentPoly.zero(self.num_vars)
        mp = self.min_exponents()
        md = other.min_exponents()
        p = self.shift(tuple(-x for x in mp))
        d = other.shift(tuple(-x for x in md))
        q = _ordinary_exact_div(p, d)
        return q.shift(tuple(a - b for a, b in zip(mp, md)))

    def divides(self, other: "LaurentPoly") -> bool:
        try:
            other.exact_div(self)
            return True
        except NotDivisibleError:
            return False

    # ---- dunder plumbing ----

    def __eq__(self, other) -> bool:
        return (isinstance(other, LaurentPoly)
                and self.num_vars == other.num_vars
                and self.terms == other.terms)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.num_vars, frozenset(self.terms.items())))
        return self._hash

    def __repr__(self):
        return f"LaurentPoly({self.to_text()!r})"

    def __str__(self):
        return self.to_text()

    # ---- canonical text ----

    def sorted_terms(self):
        """Terms in canonical (graded, then exponent-tuple) ascending order."""
        return sorted(self.terms.items(), key=lambda ec: (sum(ec[0]), ec[0]))

    def to_text(self, var_names: Sequence[str] | None = None) -> str:
        if var_names is None:
            var_names = default_var_names(self.num_vars)
        if not self.terms:
            return "0"
        pieces = []
        for i, (e, c) in enumerate(self.sorted_terms()):
            factors = []
            for name, k in zip(var_names, e):
                if k == 0:
                    continue
                factors.append(name if k == 1 else f"{name}^{k}")
            mag = abs(c)
            if not factors:
                body = str(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = str(mag) + "*" + "*".join(factors)
            if i == 0:
                pieces.append(("-" if c < 0 else "") + body)
            else:
                pieces.append(("- " if c < 0 else "+ ") + body)
        return " ".join(pieces)


def default_var_names(num_vars: int) -> list:
    if num_vars == 1:
        return ["t"]
    return [f"t{i + 1}" for i in range(num_vars)]


def series_var_names(num_vars: int) -> list:
    if num_vars == 1:
        return ["z"]
    return [f"z{i + 1}" for i in range(num_vars)]


def _ordinary_exact_div(p: LaurentPoly, d: LaurentPoly) -> LaurentPoly:
    # single-divisor division; valid because lead(p) = lead(q) * lead(d)
    # whenever the division is exact over an integral domain
    def lead(poly: LaurentPoly):
        return max(poly.terms, key=lambda e: (sum(e), e))

    dl = lead(d)
    dl_c = d.terms[dl]
    q_terms: dict = {}
    rem = p
    while not rem.is_zero():
        rl = lead(rem)
        qe = tuple(a - b for a, b in zip(rl, dl))
        if any(x < 0 for x in qe):
            raise NotDivisibleError("exact division failed (monomial mismatch)")
        qc = rem.terms[rl] / dl_c
        q_terms[qe] = qc
        rem = rem - d.shift(qe).scale(qc)
    return LaurentPoly(p.num_vars, q_terms)


def augment(p) -> Fraction:
    """Augmentation (all variables to 1) of a LaurentPoly or RatFunc."""
    if isinstance(p, RatFunc):
        da = p.den.augment()
        if da == 0:
            raise PoleError("denominator augments to zero")
        return p.num.augment() / da
    return p.augment()


def normalize_unit(p: LaurentPoly) -> LaurentPoly:
    """Canonical representative of p modulo units +-t_1^a1...t_n^an.

    Divides by the monomial of componentwise-minimal exponents, then flips
    the overall sign so the first term in canonical order has positive
    coefficient.  The zero polynomial maps to itself.
    """
    if p.is_zero():
        return p
    m = p.min_exponents()
    q = p.shift(tuple(-x for x in m))
    first = min(q.terms.items(), key=lambda ec: (sum(ec[0]), ec[0]))
    if first[1] < 0:
        q = -q
    return q


# ============================================================
#  Rational functions
# ============================================================

class RatFunc:
    """A fraction num/den of Laurent polynomials; den must be nonzero.

    Fractions stay unreduced; equality is by cross-multiplication.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: LaurentPoly, den: LaurentPoly | None = None):
        if den is None:
            den = LaurentPoly.one(num.num_vars)
        if num.num_vars != den.num_vars:
            raise AlgebraError("numerator/denominator variable counts differ")
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        self.num = num
        self.den = den

    # ---- constructors ----

    @staticmethod
    def from_poly(p: LaurentPoly) -> "RatFunc":
        return RatFunc(p)

    @staticmethod
    def zero(num_vars: int) -> "RatFunc":
        return RatFunc(LaurentPoly.zero(num_vars))

    @staticmethod
    def one(num_vars: int) -> "RatFunc":
        return RatFunc(LaurentPoly.one(num_vars))

    @staticmethod
    def const(num_vars: int, c) -> "RatFunc":
        return RatFunc(LaurentPoly.const(num_vars, c))

    @staticmethod
    def var(num_vars: int, index: int, power: int = 1) -> "RatFunc":
        return RatFunc(LaurentPoly.var(num_vars, index, power))

    @property
    def num_vars(self) -> int:
        return self.num.num_vars

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_poly(self) -> bool:
        return self.den.is_one()

    # ---- arithmetic ----

    def __add__(self, other: "RatFunc") -> "RatFunc":
        if self.den == other.den:
            return RatFunc(self.num + other.num, self.den)
        return RatFunc(self.num * other.den + other.num * self.den,
                       self.den * other.den)

    def __sub__(self, other: "RatFunc") -> "RatFunc":
        if self.den == other.den:
            return RatFunc(self.num - other.num, self.den)
        return RatFunc(self.num * other.den - other.num * self.den,
                       self.den * other.den)

    def __neg__(self) -> "RatFunc":
        return RatFunc(-self.num, self.den)

    def __mul__(self, other: "RatFunc") -> "RatFunc":
        return RatFunc(self.num * other.num, self.den * other.den)

    def inverse(self) -> "RatFunc":
        if self.num.is_zero():
            raise ZeroDivisionError("inverse of zero")
        return RatFunc(self.den, self.num)

    def __truediv__(self, other: "RatFunc") -> "RatFunc":
        return self * other.inverse()

    def bar(self) -> "RatFunc":
        return RatFunc(self.num.bar(), self.den.bar())

    def permute_vars(self, perm: Sequence[int]) -> "RatFunc":
        return RatFunc(self.num.permute_vars(perm), self.den.permute_vars(perm))

    def collapse_vars(self) -> "RatFunc":
        den = self.den.collapse_vars()
        if den.is_zero():
            raise ZeroDivisionError("denominator collapses to zero under t_i -> t")
        return RatFunc(self.num.collapse_vars(), den)

    def eval_complex(self, point: Sequence[complex]) -> complex:
        d = self.den.eval_complex(point)
        if abs(d) == 0.0:
            raise PoleError("evaluation at a pole")
        return self.num.eval_complex(point) / d

    def augment(self) -> Fraction:
        return augment(self)

    # ---- normal forms ----

    def reduced(self) -> "RatFunc":
        """Lighten the fraction without changing its value.

        Tries, in order: unit-normalize the denominator, exact polynomial
        division, scalar/monomial content extraction, univariate GCD when only
        one variable occurs.  Purely cosmetic; semantics are unchanged.
        """
        num, den = self.num, self.den
        if num.is_zero():
            return RatFunc(LaurentPoly.zero(self.num_vars))
        # fold the denominator's unit part into the numerator
        mu = den.min_exponents()
        lead = min(den.shift(tuple(-x for x in mu)).terms.items(),
                   key=lambda ec: (sum(ec[0]), ec[0]))
        den = den.shift(tuple(-x for x in mu))
        num = num.shift(tuple(-x for x in mu))
        if lead[1] < 0:
            den, num = -den, -num
        if den.is_one():
            return RatFunc(num)
        try:
            return RatFunc(num.exact_div(den))
        except NotDivisibleError:
            pass
        # pull scalar content out of both parts, remembering the ratio
        def content(p: LaurentPoly) -> Fraction:
            g = 0
            l = 1
            for c in p.terms.values():
                g = gcd(g, abs(c.numerator))
                l = l * c.denominator // gcd(l, c.denominator)
            return Fraction(g, l)

        cn, cd = content(num), content(den)
        ratio = cn / cd
        if ratio != 1:
            num = num.scale(1 / cn)
            den = den.scale(1 / cd)
        live = {i for p in (num, den) for e in p.terms for i, k in enumerate(e) if k}
        if len(live) == 1:
            (i,) = live
            g = _univar_gcd(num, den, i)
            if not g.is_one():
                num = num.exact_div(g)
                den = den.exact_div(g)
        if ratio != 1:
            num = num.scale(ratio)
        if den.is_one():
            return RatFunc(num)
        try:
            return RatFunc(num.exact_div(den))
        except NotDivisibleError:
            return RatFunc(num, den)

    # ---- comparisons ----

    def __eq__(self, other) -> bool:
        if isinstance(other, LaurentPoly):
            other = RatFunc(other)
        if not isinstance(other, RatFunc):
            return NotImplemented
        return (self.num * other.den) == (other.num * self.den)

    def __hash__(self):
        # hash-compatible with ==: use the reduced canonical-ish key
        r = self.reduced()
        if r.den.is_one():
            return hash((r.num_vars, frozenset(r.num.terms.items())))
        # fall back to a coarse bucket; fine since RatFunc is rarely hashed
        return hash(r.num_vars)

    def __repr__(self):
        return f"RatFunc({self.to_text()!r})"

    def __str__(self):
        return self.to_text()

    def to_text(self, var_names: Sequence[str] | None = None) -> str:
        if self.den.is_one():
            return self.num.to_text(var_names)
        return f"({self.num.to_text(var_names)})/({self.den.to_text(var_names)})"


def _univar_gcd(a: LaurentPoly, b: LaurentPoly, var: int) -> LaurentPoly:
    """Monic GCD of two (effectively univariate in `var`) Laurent polynomials."""
    def to_coeffs(p: LaurentPoly):
        m = min(e[var] for e in p.terms)
        deg = max(e[var] for e in p.terms) - m
        cs = [Fraction(0)] * (deg + 1)
        for e, c in p.terms.items():
            cs[e[var] - m] += c
        return cs

    def trim(cs):
        while cs and cs[-1] == 0:
            cs.pop()
        return cs

    def mod(a_cs, b_cs):
        a_cs = a_cs[:]
        while len(a_cs) >= len(b_cs) and trim(a_cs):
            f = a_cs[-1] / b_cs[-1]
            off = len(a_cs) - len(b_cs)
            for i, c in enumerate(b_cs):
                a_cs[off + i] -= f * c
            a_cs = trim(a_cs)
        return a_cs

    x, y = trim(to_coeffs(a)), trim(to_coeffs(b))
    while y:
        x, y = y, mod(x, y)
    if not x:
        return LaurentPoly.one(a.num_vars)
    x = [c / x[-1] for c in x]
    terms = {}
    for i, c in enumerate(x):
        if c:
            e = [0] * a.num_vars
            e[var] = i
            terms[tuple(e)] = c
    return LaurentPoly(a.num_vars, terms)


# ============================================================
#  Matrices over F
# ============================================================

def _coerce_entry(x, num_vars: int) -> RatFunc:
    if isinstance(x, RatFunc):
        return x
    if isinstance(x, LaurentPoly):
        return RatFunc(x)
    if isinstance(x, (int, Fraction)):
        return RatFunc.const(num_vars, x)
    raise AlgebraError(f"cannot coerce {type(x).__name__} into a matrix entry")


class RatMatrix:
    """A dense matrix over F = Q(t_1..t_n)."""

    __slots__ = ("rows", "cols", "num_vars", "entries")

    def __init__(self, num_vars: int, entries: Sequence[Sequence]):
        self.num_vars = num_vars
        self.entries = [[_coerce_entry(x, num_vars) for x in row] for row in entries]
        self.rows = len(self.entries)
        self.cols = len(self.entries[0]) if self.entries else 0
        for row in self.entries:
            if len(row) != self.cols:
                raise ShapeError("ragged rows")
            for x in row:
                if x.num_vars != num_vars:
                    raise AlgebraError("entry variable count mismatch")

    @staticmethod
    def identity(num_vars: int, n: int) -> "RatMatrix":
        return RatMatrix(num_vars, [[1 if i == j else 0 for j in range(n)]
                                    for i in range(n)])

    @staticmethod
    def zero(num_vars: int, rows: int, cols: int) -> "RatMatrix":
        return RatMatrix(num_vars, [[0] * cols for _ in range(rows)])

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def row(self, i):
        return list(self.entries[i])

    def col(self, j):
        return [self.entries[i][j] for i in range(self.rows)]

    def __add__(self, other: "RatMatrix") -> "RatMatrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ShapeError("matrix addition shape mismatch")
        return RatMatrix(self.num_vars,
                         [[self.entries[i][j] + other.entries[i][j]
                           for j in range(self.cols)] for i in range(self.rows)])

    def __sub__(self, other: "RatMatrix") -> "RatMatrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ShapeError("matrix subtraction shape mismatch")
        return RatMatrix(self.num_vars,
                         [[self.entries[i][j] - other.entries[i][j]
                           for j in range(self.cols)] for i in range(self.rows)])

    def __neg__(self) -> "RatMatrix":
        return RatMatrix(self.num_vars,
                         [[-x for x in row] for row in self.entries])

    def __mul__(self, other: "RatMatrix") -> "RatMatrix":
        if self.cols != other.rows:
            raise ShapeError(
                f"matrix product shape mismatch: {self.rows}x{self.cols} * "
                f"{other.rows}x{other.cols}")
        out = []
        for i in range(self.rows):
            row = []
            for j in range(other.cols):
                acc = RatFunc.zero(self.num_vars)
                for k in range(self.cols):
                    a = self.entries[i][k]
                    b = other.entries[k][j]
                    if a.is_zero() or b.is_zero():
                        continue
                    acc = acc + a * b
                row.append(acc)
            out.append(row)
        return RatMatrix(self.num_vars, out)

    def transpose(self) -> "RatMatrix":
        return RatMatrix(self.num_vars,
                         [[self.entries[i][j] for i in range(self.rows)]
                          for j in range(self.cols)])

    def minor_matrix(self, i: int, j: int) -> "RatMatrix":
        """Delete row i and column j (0-based)."""
        return RatMatrix(self.num_vars,
                         [[self.entries[r][c] for c in range(self.cols) if c != j]
                          for r in range(self.rows) if r != i])

    def map(self, f) -> "RatMatrix":
        return RatMatrix(self.num_vars, [[f(x) for x in row] for row in self.entries])

    def hstack(self, other: "RatMatrix") -> "RatMatrix":
        if self.rows != other.rows:
            raise ShapeError("hstack row mismatch")
        return RatMatrix(self.num_vars,
                         [self.entries[i] + other.entries[i] for i in range(self.rows)])

    def vstack(self, other: "RatMatrix") -> "RatMatrix":
        if self.cols != other.cols:
            raise ShapeError("vstack column mismatch")
        return RatMatrix(self.num_vars, list(self.entries) + list(other.entries))

    def is_zero(self) -> bool:
        return all(x.is_zero() for row in self.entries for x in row)

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "RatMatrix":
        return RatMatrix(self.num_vars,
                         [[self.entries[i][j] for j in cols] for i in rows])

    def __eq__(self, other) -> bool:
        if not isinstance(other, RatMatrix):
            return NotImplemented
        if (self.rows, self.cols, self.num_vars) != (other.rows, other.cols, other.num_vars):
            return False
        return all(self.entries[i][j] == other.entries[i][j]
                   for i in range(self.rows) for j in range(self.cols))

    def __repr__(self):
        body = "; ".join(", ".join(x.to_text() for x in row) for row in self.entries)
        return f"RatMatrix[{body}]"

    def is_identity(self) -> bool:
        if self.rows != self.cols:
            return False
        one = RatFunc.one(self.num_vars)
        zero = RatFunc.zero(self.num_vars)
        return all(self.entries[i][j] == (one if i == j else zero)
                   for i in range(self.rows) for j in range(self.cols))

    def trace(self) -> RatFunc:
        if self.rows != self.cols:
            raise ShapeError("trace of a non-square matrix")
        acc = RatFunc.zero(self.num_vars)
        for i in range(self.rows):
            acc = acc + self.entries[i][i]
        return acc


def _dedup_denominators(row: Sequence[RatFunc]):
    """Distinct denominators in a row, deduplicated by structural equality."""
    seen = []
    for x in row:
        if x.den.is_one():
            continue
        if not any(x.den == d for d in seen):
            seen.append(x.den)
    return seen


def _clear_row(row: Sequence[RatFunc], num_vars: int):
    """Scale a row of fractions to Laurent polynomials; returns (polys, factor)."""
    dens = _dedup_denominators(row)
    factor = LaurentPoly.one(num_vars)
    for d in dens:
        factor = factor * d
    polys = []
    for x in row:
        # x.den (if nontrivial) matches exactly one dedup'd factor, so
        # multiplying by the remaining factors yields x * factor exactly
        p = x.num
        for d in dens:
            if not (x.den == d):
                p = p * d
        polys.append(p)
    return polys, factor


def _row_to_nonneg(polys):
    """Shift a polynomial row so all exponents are >= 0; returns (row, shift)."""
    mins = None
    for p in polys:
        if p.is_zero():
            continue
        m = p.min_exponents()
        mins = m if mins is None else tuple(min(a, b) for a, b in zip(mins, m))
    if mins is None:
        return list(polys), None
    neg = tuple(min(x, 0) for x in mins)
    if all(x == 0 for x in neg):
        return list(polys), None
    unshift = tuple(-x for x in neg)
    return [p.shift(unshift) if not p.is_zero() else p for p in polys], neg


def _bareiss_eliminate(mat):
    """In-place fraction-free elimination on a list-of-lists LaurentPoly matrix.

    Returns (sign, pivots, rank).  mat is reduced to row echelon form with the
    Bareiss division discipline, valid over any integral domain.
    """
    rows = len(mat)
    cols = len(mat[0]) if rows else 0
    sign = 1
    prev = None  # previous pivot
    pivots = []
    r = 0
    for c in range(cols):
        if r >= rows:
            break
        pivot_row = None
        for i in range(r, rows):
            if not mat[i][c].is_zero():
                pivot_row = i
                break
        if pivot_row is None:
            continue
        if pivot_row != r:
            mat[r], mat[pivot_row] = mat[pivot_row], mat[r]
            sign = -sign
        piv = mat[r][c]
        for i in range(r + 1, rows):
            for j in range(cols):
                if j == c:
                    continue
                num = piv * mat[i][j] - mat[i][c] * mat[r][j]
                mat[i][j] = num if prev is None else num.exact_div(prev)
            mat[i][c] = LaurentPoly.zero(piv.num_vars)
        pivots.append((r, c))
        prev = piv
        r += 1
    return sign, pivots, r


def det(M: RatMatrix) -> RatFunc:
    """Determinant over F via row denominator clearing + Bareiss elimination."""
    if M.rows != M.cols:
        raise ShapeError("determinant of a non-square matrix")
    n = M.rows
    if n == 0:
        return RatFunc.one(M.num_vars)
    cleared = []
    den_factor = LaurentPoly.one(M.num_vars)
    shift_acc = [0] * M.num_vars
    for i in range(n):
        polys, factor = _clear_row(M.row(i), M.num_vars)
        polys, neg = _row_to_nonneg(polys)
        if neg is not None:
            shift_acc = [a + b for a, b in zip(shift_acc, neg)]
        den_factor = den_factor * factor
        cleared.append(polys)
    if n <= 2:
        if n == 1:
            d = cleared[0][0]
        else:
            d = cleared[0][0] * cleared[1][1] - cleared[0][1] * cleared[1][0]
        sign = 1
    else:
        sign, _pivots, r = _bareiss_eliminate(cleared)
        if r < n:
            return RatFunc.zero(M.num_vars)
        d = cleared[n - 1][n - 1]
    if d.is_zero():
        return RatFunc.zero(M.num_vars)
    if sign < 0:
        d = -d
    d = d.shift(shift_acc)
    return RatFunc(d, den_factor)


def solve(M: RatMatrix, B: RatMatrix) -> RatMatrix:
    """Solve M X = B exactly (M square and invertible over F).

    Clears denominators row by row, then runs fraction-free Gauss-Jordan
    (Bareiss one-step rule applied to all rows), so every intermediate entry
    stays a Laurent polynomial; each solution entry is a single fraction
    N_ij / pivot.
    """
    if M.rows != M.cols:
        raise ShapeError("solve requires a square coefficient matrix")
    if M.rows != B.rows:
        raise ShapeError("right-hand side row count mismatch")
    n = M.rows
    nv = M.num_vars
    if n == 0:
        return RatMatrix(nv, [])
    width = n + B.cols
    # scaling an equation by a nonzero polynomial preserves the solution set
    aug = []
    for i in range(n):
        polys, _factor = _clear_row(list(M.row(i)) + list(B.row(i)), nv)
        polys, _neg = _row_to_nonneg(polys)
        aug.append(polys)
    prev = None
    for k in range(n):
        pivot_row = None
        for i in range(k, n):
            if not aug[i][k].is_zero():
                pivot_row = i
                break
        if pivot_row is None:
            raise SingularMatrixError("coefficient matrix is singular over F")
        if pivot_row != k:
            aug[k], aug[pivot_row] = aug[pivot_row], aug[k]
        piv = aug[k][k]
        for i in range(n):
            if i == k:
                continue
            fac = aug[i][k]
            for j in range(width):
                if j == k:
                    continue
                num = piv * aug[i][j] - fac * aug[k][j]
                aug[i][j] = num if prev is None else num.exact_div(prev)
            aug[i][k] = LaurentPoly.zero(nv)
        prev = piv
    d = aug[n - 1][n - 1]
    out = [[RatFunc(aug[i][n + j], d) for j in range(B.cols)] for i in range(n)]
    return RatMatrix(nv, out)


def rank(M: RatMatrix) -> int:
    """Rank over F.  Row scaling by denominators is rank-preserving."""
    if M.rows == 0 or M.cols == 0:
        return 0
    cleared = []
    for i in range(M.rows):
        polys, _ = _clear_row(M.row(i), M.num_vars)
        polys, _ = _row_to_nonneg(polys)
        cleared.append(polys)
    _, _, r = _bareiss_eliminate(cleared)
    return r


def left_kernel_vector(M: RatMatrix):
    """A nonzero vector u with u M = 0, or None if the left kernel is trivial."""
    t = M.transpose()
    n = t.cols
    cleared = []
    for i in range(t.rows):
        polys, _ = _clear_row(t.row(i), t.num_vars)
        polys, _ = _row_to_nonneg(polys)
        cleared.append(polys)
    original = [row[:] for row in cleared]
    _, pivots, r = _bareiss_eliminate(cleared)
    if r >= n:
        return None
    if r == n - 1:
        # nullity one: Cramer's rule over the independent rows gives the
        # kernel as signed maximal minors, far more compact than the
        # fractions produced by back-substitution
        if n == 1:
            return [RatFunc.one(M.num_vars)]
        rows = [original[pr] for (pr, _c) in pivots]
        x = []
        sign = 1
        for j in range(n):
            minor = RatMatrix(
                M.num_vars,
                [[row[c] for c in range(n) if c != j] for row in rows],
            )
            d = det(minor)
            x.append(d if sign > 0 else -d)
            sign = -sign
        return x
    pivot_cols = [c for (_r, c) in pivots]
    free = [c for c in range(n) if c not in pivot_cols][0]
    # back-substitute over F for the free column
    x = [RatFunc.zero(M.num_vars) for _ in range(n)]
    x[free] = RatFunc.one(M.num_vars)
    for (pr, pc) in reversed(pivots):
        acc = RatFunc.zero(M.num_vars)
        for j in range(pc + 1, n):
            if not cleared[pr][j].is_zero() and not x[j].is_zero():
                acc = acc + RatFunc(cleared[pr][j]) * x[j]
        x[pc] = -acc / RatFunc(cleared[pr][pc])
    return x


# ============================================================
#  Truncated power series (Taylor coefficients in z_i = 1 - t_i)
# ============================================================

class TruncatedSeries:
    """Polynomial truncation of a power series: terms of total degree <= bound."""

    __slots__ = ("num_vars", "bound", "terms")

    def __init__(self, num_vars: int, bound: int, terms: Mapping[Exponents, Fraction] | None = None):
        if bound < 0:
            raise AlgebraError("series bound must be >= 0")
        self.num_vars = num_vars
        self.bound = bound
        clean: dict = {}
        if terms:
            for e, c in terms.items():
                e = tuple(e)
                if len(e) != num_vars or any(x < 0 for x in e):
                    raise AlgebraError(f"bad series exponent {e}")
                if sum(e) > bound:
                    continue
                c = _as_fraction(c)
                if c != 0:
                    clean[e] = clean.get(e, Fraction(0)) + c
                    if clean[e] == 0:
                        del clean[e]
        self.terms = clean

    @staticmethod
    def zero(num_vars: int, bound: int) -> "TruncatedSeries":
        return TruncatedSeries(num_vars, bound, {})

    @staticmethod
    def one(num_vars: int, bound: int) -> "TruncatedSeries":
        return TruncatedSeries(num_vars, bound, {(0,) * num_vars: Fraction(1)})

    def _check(self, other: "TruncatedSeries"):
        if self.num_vars != other.num_vars or self.bound != other.bound:
            raise AlgebraError("series arity/bound mismatch")

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._check(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, Fraction(0)) + c
            if s == 0:
                out.pop(e, None)
            else:
                out[e] = s
        return TruncatedSeries(self.num_vars, self.bound, out)

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries(self.num_vars, self.bound,
                               {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return self + (-other)

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._check(other)
        out: dict = {}
        for ea, ca in self.terms.items():
            da = sum(ea)
            for eb, cb in other.terms.items():
                if da + sum(eb) > self.bound:
                    continue
                e = tuple(x + y for x, y in zip(ea, eb))
                s = out.get(e, Fraction(0)) + ca * cb
                if s == 0:
                    out.pop(e, None)
                else:
                    out[e] = s
        return TruncatedSeries(self.num_vars, self.bound, out)

    def scale(self, c) -> "TruncatedSeries":
        c = _as_fraction(c)
        return TruncatedSeries(self.num_vars, self.bound,
                               {e: cc * c for e, cc in self.terms.items()})

    def coefficient(self, exps: Sequence[int]) -> Fraction:
        return self.terms.get(tuple(exps), Fraction(0))

    def is_zero(self) -> bool:
        return not self.terms

    def min_total_degree(self):
        """Smallest total degree with a nonzero coefficient; None if zero."""
        if not self.terms:
            return None
        return min(sum(e) for e in self.terms)

    def __eq__(self, other) -> bool:
        return (isinstance(other, TruncatedSeries)
                and self.num_vars == other.num_vars
                and self.bound == other.bound
                and self.terms == other.terms)

    def __hash__(self):
        return hash((self.num_vars, self.bound, frozenset(self.terms.items())))

    def __repr__(self):
        return f"TruncatedSeries({self.to_text()!r}, bound={self.bound})"

    def to_text(self, var_names: Sequence[str] | None = None) -> str:
        if var_names is None:
            var_names = series_var_names(self.num_vars)
        return LaurentPoly(self.num_vars, self.terms).to_text(var_names)


def _poly_to_series(p: LaurentPoly, bound: int) -> TruncatedSeries:
    """Substitute t_i = 1 - z_i into a Laurent polynomial, truncating."""
    nv = p.num_vars
    one_minus = []
    geom = []
    for i in range(nv):
        e = [0] * nv
        e[i] = 1
        zi = tuple(e)
        one_minus.append(TruncatedSeries(nv, bound, {(0,) * nv: 1, zi: -1}))
        geom.append(TruncatedSeries(nv, bound,
                                    {tuple(k if j == i else 0 for j in range(nv)): 1
                                     for k in range(bound + 1)}))
    # cache powers per variable
    pow_cache: dict = {}

    def var_power(i: int, k: int) -> TruncatedSeries:
        key = (i, k)
        if key in pow_cache:
            return pow_cache[key]
        base = one_minus[i] if k > 0 else geom[i]
        result = TruncatedSeries.one(nv, bound)
        for _ in range(abs(k)):
            result = result * base
        pow_cache[key] = result
        return result

    total = TruncatedSeries.zero(nv, bound)
    for e, c in p.terms.items():
        term = TruncatedSeries(nv, bound, {(0,) * nv: c})
        for i, k in enumerate(e):
            if k:
                term = term * var_power(i, k)
        total = total + term
    return total


def taylor_expand(r, bound: int) -> TruncatedSeries:
    """Taylor coefficients of a rational function at t_i = 1 (z_i = 1 - t_i).

    The denominator must not vanish at t = 1; 1/den is expanded as a geometric
    series in (1 - den/den(1)), which has positive valuation.
    """
    if isinstance(r, LaurentPoly):
        r = RatFunc(r)
    c0 = r.den.augment()
    if c0 == 0:
        raise PoleError("denominator vanishes at t_i = 1; Taylor expansion undefined")
    num_s = _poly_to_series(r.num, bound)
    den_s = _poly_to_series(r.den, bound).scale(Fraction(1) / c0)
    # u := 1 - den/c0 has zero constant term, so the geometric series truncates
    u = TruncatedSeries.one(r.num_vars, bound) - den_s
    inv = TruncatedSeries.one(r.num_vars, bound)
    acc = TruncatedSeries.one(r.num_vars, bound)
    for _ in range(bound):
        acc = acc * u
        if acc.is_zero():
            break
        inv = inv + acc
    return num_s * inv.scale(Fraction(1) / c0)


# ============================================================
#  Canonical-text parsing
# ============================================================

_TOKEN_RE = re.compile(
    r"[+-]"
    r"|[0-9]+(?:/[0-9]+)?"
    r"|[A-Za-z_][A-Za-z0-9_]*(?:\^-?[0-9]+)?"
    r"|\*"
    r"|\S")
_VAR_RE = re.compile(r"([A-Za-z_][A-Za-z0-9_]*)(?:\^(-?[0-9]+))?\Z")


def parse_poly(text: str, num_vars: int, var_names: Sequence[str] | None = None) -> LaurentPoly:
    """Parse the canonical polynomial text form back into a LaurentPoly."""
    if var_names is None:
        var_names = default_var_names(num_vars)
    name_index = {n: i for i, n in enumerate(var_names)}
    s = text.strip()
    if not s:
        raise ParseError("empty polynomial text")
    if s == "0":
        return LaurentPoly.zero(num_vars)
    tokens = _TOKEN_RE.findall(s)
    terms: dict = {}
    i = 0
    n = len(tokens)
    while i < n:
        sign = 1
        while i < n and tokens[i] in "+-":
            if tokens[i] == "-":
                sign = -sign
            i += 1
        coeff = Fraction(sign)
        exps = [0] * num_vars
        saw_factor = False
        while i < n:
            tok = tokens[i]
            if tok in "+-":
                break
            if tok == "*":
                if not saw_factor:
                    raise ParseError("term starts with '*'")
                i += 1
                continue
            if tok[0].isdigit():
                try:
                    coeff *= Fraction(tok)
                except (ValueError, ZeroDivisionError) as exc:
                    raise ParseError(f"bad coefficient {tok!r}") from exc
            else:
                m = _VAR_RE.match(tok)
                if not m:
                    raise ParseError(f"unexpected token {tok!r}")
                name, power = m.group(1), m.group(2)
                if name not in name_index:
                    raise ParseError(f"unknown variable {name!r}")
                exps[name_index[name]] += int(power) if power else 1
            saw_factor = True
            i += 1
        if not saw_factor:
            raise ParseError("empty term")
        e = tuple(exps)
        terms[e] = terms.get(e, Fraction(0)) + coeff
    return LaurentPoly(num_vars, terms)


def parse_ratfunc(text: str, num_vars: int, var_names: Sequence[str] | None = None) -> RatFunc:
    """Parse "(num)/(den)" or a bare polynomial."""
    s = text.strip()
    if s.startswith("(") and ")/(" in s and s.endswith(")"):
        cut = s.index(")/(")
        num = parse_poly(s[1:cut], num_vars, var_names)
        den = parse_poly(s[cut + 3:-1], num_vars, var_names)
        return RatFunc(num, den)
    if s.startswith("(") and s.endswith(")") and ")/(" not in s:
        s = s[1:-1]
    return RatFunc(parse_poly(s, num_vars, var_names))
