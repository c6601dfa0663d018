"""Exact homogeneous bivariate polynomials over the rationals.

A polynomial of degree n is stored as the coefficient vector c_0..c_n of

    p(x, y) = sum_i c_i x^(n-i) y^i.

Everything here is exact rational arithmetic: products, substitutions by
2x2 matrices, and Yun squarefree decomposition.  Root multiplicities and
the count of distinct projective roots are decided with no floating
point, so the finite/infinite dichotomy downstream has no tolerance in it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction


class SingularMatrixError(ValueError):
    """Substitution matrix has zero determinant."""


def _as_fraction_tuple(coeffs) -> tuple[Fraction, ...]:
    return tuple(Fraction(c) for c in coeffs)


class HomPoly:
    """Homogeneous bivariate polynomial with exact rational coefficients."""

    __slots__ = ("n", "coeffs")

    def __init__(self, coeffs):
        cs = _as_fraction_tuple(coeffs)
        if not cs:
            raise ValueError("a homogeneous polynomial needs at least one coefficient")
        self.coeffs = cs
        self.n = len(cs) - 1

    @classmethod
    def zero(cls, n: int) -> "HomPoly":
        return cls([Fraction(0)] * (n + 1))

    @property
    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def __eq__(self, other) -> bool:
        return isinstance(other, HomPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __mul__(self, other):
        if isinstance(other, HomPoly):
            return product(self, other)
        s = Fraction(other)
        return HomPoly([c * s for c in self.coeffs])

    __rmul__ = __mul__

    def __add__(self, other: "HomPoly") -> "HomPoly":
        if self.n != other.n:
            raise ValueError("degree mismatch in homogeneous addition")
        return HomPoly([a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other: "HomPoly") -> "HomPoly":
        if self.n != other.n:
            raise ValueError("degree mismatch in homogeneous subtraction")
        return HomPoly([a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __pow__(self, e: int) -> "HomPoly":
        if e < 0:
            raise ValueError("negative power")
        out = HomPoly([1])
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def __repr__(self) -> str:
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            xs = f"x^{self.n - i}" if self.n - i else ""
            ys = f"y^{i}" if i else ""
            cs = "" if c == 1 and (xs or ys) else str(c)
            terms.append(cs + xs + ys or "0")
        return " + ".join(terms) if terms else "0"


def product(a: HomPoly, b: HomPoly) -> HomPoly:
    """Exact coefficient convolution; degrees add."""
    out = [Fraction(0)] * (a.n + b.n + 1)
    for i, ca in enumerate(a.coeffs):
        if ca == 0:
            continue
        for j, cb in enumerate(b.coeffs):
            if cb:
                out[i + j] += ca * cb
    return HomPoly(out)


def substitute_exact(p: HomPoly, m) -> HomPoly:
    """Expand p(a x + b y, c x + d y) exactly for a rational 2x2 matrix.

    Horner over the substituted linears keeps this O(n^2) coefficient
    operations.
    """
    (a, b), (c, d) = m
    a, b, c, d = Fraction(a), Fraction(b), Fraction(c), Fraction(d)
    if a * d - b * c == 0:
        raise SingularMatrixError("substitution matrix is singular")
    n = p.n
    # xs = a x + b y, ys = c x + d y, as degree-1 coefficient vectors
    xs = [a, b]
    ys = [c, d]

    def lin_mul(vec, lin):
        out = [Fraction(0)] * (len(vec) + 1)
        for i, v in enumerate(vec):
            if v:
                out[i] += v * lin[0]
                out[i + 1] += v * lin[1]
        return out

    ypow = [Fraction(1)]  # ys^j, updated incrementally
    acc = [p.coeffs[0]]   # Horner state: sum_{i<=j} c_i xs^(j-i) ys^i
    for j in range(1, n + 1):
        acc = lin_mul(acc, xs)
        ypow = lin_mul(ypow, ys)
        cj = p.coeffs[j]
        if cj:
            for t in range(j + 1):
                acc[t] += cj * ypow[t]
    return HomPoly(acc)


# -- integer univariate helpers (dense lists, constant term LAST) -------------
#
# Univariate polynomials below are lists [c_deg, ..., c_0] (leading first),
# matching how a HomPoly dehomogenizes: p(z, 1) = sum_i c_i z^(n-i).


def _trim(f: list[int]) -> list[int]:
    i = 0
    while i < len(f) - 1 and f[i] == 0:
        i += 1
    return f[i:]


def _content(f: list[int]) -> int:
    g = 0
    for c in f:
        g = math.gcd(g, abs(c))
    return g or 1


def _primitive(f: list[int]) -> list[int]:
    f = _trim(f)
    g = _content(f)
    f = [c // g for c in f]
    if f[0] < 0:
        f = [-c for c in f]
    return f

def _deriv(f: list[int]) -> list[int]:
    d = len(f) - 1
    if d == 0:
        return [0]
    return [c * (d - i) for i, c in enumerate(f[:-1])]


def _pseudo_rem(f: list[int], g: list[int]) -> list[int]:
    """Pseudo-remainder of f by g over the integers."""
    f = list(f)
    dg = len(g) - 1
    lg = g[0]
    while len(f) - 1 >= dg and any(f):
        if f[0] == 0:
            f = f[1:]
            continue
        lf = f[0]
        f = [c * lg for c in f]
        for j in range(dg + 1):
            f[j] -= lf * g[j]
        f = f[1:]
    if not f:
        return [0]
    return _trim(f)


def _int_gcd(f: list[int], g: list[int]) -> list[int]:
    """Primitive gcd of two integer polynomials (primitive PRS)."""
    f = _primitive(f) if any(f) else [0]
    g = _primitive(g) if any(g) else [0]
    if f == [0]:
        return g
    if g == [0]:
        return f
    if len(f) < len(g):
        f, g = g, f
    while True:
        r = _pseudo_rem(f, g)
        if r == [0] or not any(r):
            return _primitive(g)
        f, g = g, _primitive(r)
        if len(g) == 1:
            return [1]


def _exact_div(f: list[int], g: list[int]) -> list[int]:
    """Exact division of integer polynomials; raises if not exact."""
    f = list(f)
    dg = len(g) - 1
    out = []
    while len(f) - 1 >= dg:
        if f[0] % g[0] != 0:
            raise ArithmeticError("inexact polynomial division")
        qc = f[0] // g[0]
        out.append(qc)
        for j in range(dg + 1):
            f[j] -= qc * g[j]
        assert f[0] == 0
        f = f[1:]
    if any(f):
        raise ArithmeticError("inexact polynomial division")
    return out if out else [0]


def _poly_sub(f: list[int], g: list[int]) -> list[int]:
    lf, lg = len(f), len(g)
    n = max(lf, lg)
    out = [0] * n
    for i, c in enumerate(f):
        out[n - lf + i] += c
    for i, c in enumerate(g):
        out[n - lg + i] -= c
    return _trim(out)


def _yun(f: list[int]) -> list[tuple[list[int], int]]:
    """Yun squarefree decomposition of a primitive integer polynomial.

    Returns [(a_i, i)] with f = const * prod a_i^i, each a_i primitive,
    squarefree, pairwise coprime; constant a_i are dropped.
    """
    f = _primitive(f)
    if len(f) == 1:
        return []
    fp = _deriv(f)
    g = _int_gcd(f, fp)
    if len(g) == 1:
        return [(f, 1)]
    c = _exact_div(f, g)
    d = _poly_sub(_exact_div(fp, g), _deriv(c))
    out = []
    i = 1
    while len(c) > 1:
        if i > len(f):
            raise AssertionError("squarefree decomposition failed to terminate")
        a = _int_gcd(c, d)
        if len(a) > 1:
            out.append((_primitive(a), i))
        c = _exact_div(c, a)
        d = _poly_sub(_exact_div(d, a), _deriv(c))
        i += 1
    return out


def _clear_denominators(coeffs) -> list[int]:
    denom = 1
    for c in coeffs:
        denom = denom * c.denominator // math.gcd(denom, c.denominator)
    return [int(c * denom) for c in coeffs]


@dataclass(frozen=True)
class MultiplicityStructure:
    """Exact projective root structure of a homogeneous polynomial.

    ``factors`` lists pairwise-coprime squarefree homogeneous polynomials
    with their multiplicities; their product recovers the input up to a
    rational scalar.  The factors x and y carry the roots at (0:1) and
    (1:0) respectively.
    """

    distinct_count: int
    multiplicities: tuple[int, ...]
    squarefree_part: HomPoly
    factors: tuple[tuple[HomPoly, int], ...]


def multiplicity_structure(p: HomPoly) -> MultiplicityStructure:
    """Exact Yun-based multiplicity structure; no numerics anywhere."""
    if p.is_zero:
        raise ValueError("zero polynomial has no root structure")
    n = p.n
    nz = [i for i, c in enumerate(p.coeffs) if c != 0]
    i_min, i_max = nz[0], nz[-1]
    factors: list[tuple[HomPoly, int]] = []
    if i_min > 0:
        factors.append((HomPoly([0, 1]), i_min))        # y: root at (1:0)
    if i_max < n:
        factors.append((HomPoly([1, 0]), n - i_max))    # x: root at (0:1)

    mid_degree = i_max - i_min
    mults: list[int] = [m for _, m in factors]
    if mid_degree > 0:
        mid = _clear_denominators(p.coeffs[i_min:i_max + 1])
        for fac, mult in _yun(mid):
            d = len(fac) - 1
            if d == 0:
                continue
            factors.append((HomPoly([Fraction(c) for c in fac]), mult))
            mults.extend([mult] * d)

    sq = HomPoly([1])
    for fac, _ in factors:
        sq = sq * fac
    distinct = sq.n
    return MultiplicityStructure(
        distinct_count=distinct,
        multiplicities=tuple(sorted(mults)),
        squarefree_part=sq,
        factors=tuple(factors),
    )


def is_formally_self_dual(coeffs, q: int) -> bool:
    """Exact test of w(x+(q-1)y, x-y) == q^(n/2) w(x, y).

    For odd n with non-square q the scale is irrational while both sides
    are rational, so the answer is False without any expansion.
    """
    w = coeffs if isinstance(coeffs, HomPoly) else HomPoly(coeffs)
    n = w.n
    if n % 2 == 0:
        scale = Fraction(q) ** (n // 2)
    else:
        s = math.isqrt(q)
        if s * s != q:
            return False
        scale = Fraction(s) ** n
    sub = substitute_exact(w, [[1, q - 1], [1, -1]])
    return sub == scale * w
