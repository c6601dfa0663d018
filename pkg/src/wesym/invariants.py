"""Invariant-ring membership: express an enumerator in two generators.

Membership in C[f1, f2] at a fixed degree n is a finite linear question:
the exponent pairs (a, b) with a*deg(f1) + b*deg(f2) = n span the degree-n
slice, and the coefficient comparison is an exact rational linear system.
There is no tolerance anywhere in this module.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Optional

from .codes import named_code, weight_enumerator
from .homopoly import HomPoly


class DegreeMismatchError(ValueError):
    """No exponent pair (a, b) reaches the target degree."""


class NotMemberError(ValueError):
    """The polynomial is not in the ring generated by f1 and f2 at its
    degree (the linear system is inconsistent)."""


@dataclass(frozen=True)
class InvariantDecomposition:
    f1: HomPoly
    f2: HomPoly
    terms: tuple[tuple[int, int, Fraction], ...]   # (a, b, coefficient)
    unique: bool

    def reconstruct(self) -> HomPoly:
        deg = self.terms[0][0] * self.f1.n + self.terms[0][1] * self.f2.n \
            if self.terms else 0
        acc = HomPoly.zero(deg)
        for a, b, coeff in self.terms:
            acc = acc + coeff * (self.f1 ** a) * (self.f2 ** b)
        return acc


@lru_cache(maxsize=1)
def gleason_generators() -> tuple[HomPoly, HomPoly]:
    """Enumerators of the extended Hamming [8,4] and extended binary Golay
    [24,12] codes, computed by direct enumeration."""
    f1 = weight_enumerator(named_code("hamming8")).as_hompoly()
    f2 = weight_enumerator(named_code("golay24")).as_hompoly()
    return f1, f2


def dihedral_generators(i: int) -> tuple[HomPoly, HomPoly]:
    """Generators of the invariant ring of the dihedral group generated by
    diag(1, zeta_{2^i}) and the coordinate swap:

        f1 = x^(2^i) + y^(2^i)
        f2 = x^(2^(i+1)) + 2(2^(i+1) - 1) x^(2^i) y^(2^i) + y^(2^(i+1))
    """
    if i < 1:
        raise ValueError("need i >= 1")
    half = 2 ** i
    f1 = HomPoly([1] + [0] * (half - 1) + [1])
    mid = 2 * (2 ** (i + 1) - 1)
    f2 = HomPoly([1] + [0] * (half - 1) + [mid] + [0] * (half - 1) + [1])
    return f1, f2


def _exponent_pairs(d1: int, d2: int, n: int) -> list[tuple[int, int]]:
    pairs = []
    for a in range(n // d1 + 1):
        rem = n - a * d1
        if rem % d2 == 0:
            pairs.append((a, rem // d2))
    return pairs


def _solve_exact(matrix: list[list[Fraction]], rhs: list[Fraction]
                 ) -> tuple[Optional[list[Fraction]], bool]:
    """Exact Gaussian elimination on an overdetermined system.

    Returns (solution, full_column_rank); solution is None when the system
    is inconsistent.  Free columns (if any) are set to zero, which picks
    the solution supported on the lexicographically smallest pivot set.
    """
    rows = len(matrix)
    cols = len(matrix[0]) if rows else 0
    aug = [list(matrix[r]) + [rhs[r]] for r in range(rows)]
    pivot_cols = []
    r = 0
    for c in range(cols):
        sel = None
        for i in range(r, rows):
            if aug[i][c] != 0:
                sel = i
                break
        if sel is None:
            continue
        aug[r], aug[sel] = aug[sel], aug[r]
        pv = aug[r][c]
        aug[r] = [x / pv for x in aug[r]]
        for i in range(rows):
            if i != r and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[r])]
        pivot_cols.append(c)
        r += 1
    for i in range(r, rows):
        if aug[i][cols] != 0:
            return None, len(pivot_cols) == cols
    sol = [Fraction(0)] * cols
    for i, c in enumerate(pivot_cols):
        sol[c] = aug[i][cols]
    return sol, len(pivot_cols) == cols


def decompose(p: HomPoly, f1: HomPoly, f2: HomPoly) -> InvariantDecomposition:
    """Express p as sum coeff * f1^a f2^b with a d1 + b d2 = deg p, exactly.

    Raises DegreeMismatchError when no exponent pair exists and
    NotMemberError when the system is inconsistent.
    """
    d1, d2 = f1.n, f2.n
    if d1 < 1 or d2 < 1:
        raise ValueError("generators must have positive degree")
    n = p.n
    pairs = _exponent_pairs(d1, d2, n)
    if not pairs:
        raise DegreeMismatchError(
            f"no (a, b) >= 0 solves {d1} a + {d2} b = {n}")
    basis = []
    for a, b in pairs:
        basis.append(((f1 ** a) * (f2 ** b)).coeffs)
    matrix = [[basis[j][i] for j in range(len(pairs))] for i in range(n + 1)]
    sol, unique = _solve_exact(matrix, list(p.coeffs))
    if sol is None:
        raise NotMemberError(
            "polynomial is not in the ring generated by f1 and f2")
    terms = tuple((a, b, coeff) for (a, b), coeff in zip(pairs, sol) if coeff != 0)
    return InvariantDecomposition(f1=f1, f2=f2, terms=terms, unique=unique)
