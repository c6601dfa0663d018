"""Symmetry groups of weight enumerators in PGL2(C) and GL2(C).

The finite/infinite dichotomy is decided exactly from the root structure:
three or more distinct projective roots force a finite group.  In the
finite case the group is recovered by the root-permutation search: fix a
well-separated source triple of roots, and for every ordered target triple
solve the 3x4 homogeneous system for the matrix carrying one to the other
(the projective action is sharply 3-transitive, so ordered targets are the
right enumeration).  A candidate survives only if it permutes the root set
within a separation-derived tolerance, preserves multiplicities, and fixes
the polynomial up to a scalar at certified residual -- the permutation test
alone is necessary but not sufficient at finite precision.

Accepted elements are keyed by the exact root permutation they induce
(faithful, since the action on >= 3 points is), which makes deduplication,
closure, inverses and element orders exact discrete computations.
"""

from __future__ import annotations

import itertools
import logging
import math
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Union

import numpy as np
from mpmath import mp, mpc, mpf

from .codes import WeightEnumerator
from .homopoly import HomPoly, multiplicity_structure
from .roots import DEFAULT_PREC, PREC_CAP, RootSet, find_roots

log = logging.getLogger(__name__)

INFINITE_ZERO_CODE = "zero_code"
INFINITE_FULL_SPACE = "full_space"
INFINITE_SUM_OF_PAIRS = "sum_of_pairs"
INFINITE_OTHER_TWO_ROOT = "other_two_root"


class ClosureFailureError(RuntimeError):
    """The accepted element set cannot be closed under products; signals
    tolerance misconfiguration, never ignored silently."""


class NotBlichfeldtError(RuntimeError):
    """Element-order census matches no finite subgroup of PGL2(C)."""


class DegenerateTupleError(ValueError):
    """Cross ratio of a tuple with repeated points."""


class _Retry(Exception):
    """Internal: redo the finite-group search at doubled precision."""


@dataclass(frozen=True)
class IsoType:
    family: str                 # 'cyclic' | 'dihedral' | 'A4' | 'S4' | 'A5'
    parameter: Optional[int] = None

    @property
    def order(self) -> int:
        if self.family == "cyclic":
            return self.parameter
        if self.family == "dihedral":
            return 2 * self.parameter
        return {"A4": 12, "S4": 24, "A5": 60}[self.family]

    @property
    def label(self) -> str:
        if self.family == "cyclic":
            return "{Id}" if self.parameter == 1 else f"C{self.parameter}"
        if self.family == "dihedral":
            return "V4" if self.parameter == 2 else f"D{self.parameter}"
        return self.family

    def __repr__(self) -> str:
        return f"IsoType({self.label})"


class ProjectiveMatrix:
    """A 2x2 complex matrix normalized so its largest-modulus entry is 1.

    Ties within relative 2^(-prec/2) of the maximum are broken by scan
    order a, b, c, d, which makes normalization idempotent.
    """

    __slots__ = ("a", "b", "c", "d", "prec")

    def __init__(self, a: mpc, b: mpc, c: mpc, d: mpc, prec: int,
                 _normalized: bool = False):
        if not _normalized:
            entries = [mpc(a), mpc(b), mpc(c), mpc(d)]
            mags = [abs(e) for e in entries]
            top = max(mags)
            if top == 0:
                raise ValueError("zero matrix is not projective")
            tol = top * (mpf(2) ** (-(prec // 2)))
            pick = next(e for e, m in zip(entries, mags) if m >= top - tol)
            with mp.workprec(prec + 16):
                a, b, c, d = (e / pick for e in entries)
        self.a, self.b, self.c, self.d = mpc(a), mpc(b), mpc(c), mpc(d)
        self.prec = prec

    def det(self) -> mpc:
        return self.a * self.d - self.b * self.c

    def entries(self) -> tuple[mpc, mpc, mpc, mpc]:
        return (self.a, self.b, self.c, self.d)

    def apply(self, z: mpc) -> mpc:
        return (self.a * z + self.b) / (self.c * z + self.d)

    def compose(self, other: "ProjectiveMatrix") -> "ProjectiveMatrix":
        """Matrix of self acting after other (matrix product self*other)."""
        with mp.workprec(self.prec + 16):
            return ProjectiveMatrix(
                self.a * other.a + self.b * other.c,
                self.a * other.b + self.b * other.d,
                self.c * other.a + self.d * other.c,
                self.c * other.b + self.d * other.d,
                self.prec)

    def distance(self, other: "ProjectiveMatrix") -> mpf:
        return max(abs(x - y) for x, y in zip(self.entries(), other.entries()))

    def is_identity(self, tol: mpf) -> bool:
        return (abs(self.a - self.d) <= tol and abs(self.b) <= tol
                and abs(self.c) <= tol and abs(self.a - 1) <= tol)

    def __repr__(self) -> str:
        return (f"ProjectiveMatrix([{complex(self.a)}, {complex(self.b)}; "
                f"{complex(self.c)}, {complex(self.d)}])")


@dataclass(frozen=True)
class SymmetryElement:
    proj: ProjectiveMatrix
    lam: mpc                    # w(g(x,y)) = lam * w(x,y)
    order: int
    perm: tuple[int, ...]       # induced permutation of the sorted root list


@dataclass(frozen=True)
class SymmetryGroup:
    kind: str                   # 'finite' | 'infinite'
    degree: int
    case: Optional[str] = None  # infinite case tag
    elements: tuple[SymmetryElement, ...] = ()
    iso: Optional[IsoType] = None
    prec: Optional[int] = None
    roots: Optional[RootSet] = None

    @property
    def proj_order(self) -> Optional[int]:
        return len(self.elements) if self.kind == "finite" else None

    @property
    def full_order(self) -> Optional[int]:
        return self.degree * len(self.elements) if self.kind == "finite" else None

    def __repr__(self) -> str:
        if self.kind == "infinite":
            return f"SymmetryGroup(infinite, case={self.case})"
        return f"SymmetryGroup({self.iso.label}, proj_order={self.proj_order})"


# -- exact finite/infinite classification --------------------------------------


def _coerce_poly(w: Union[WeightEnumerator, HomPoly],
                 q: Optional[int]) -> tuple[HomPoly, Optional[int]]:
    if isinstance(w, WeightEnumerator):
        return w.as_hompoly(), q if q is not None else w.q
    return w, q


def classify_finiteness(w: Union[WeightEnumerator, HomPoly],
                        q: Optional[int] = None) -> tuple[str, Optional[str]]:
    """('finite', None) or ('infinite', case), decided exactly."""
    hp, q = _coerce_poly(w, q)
    if hp.is_zero:
        raise ValueError("zero polynomial")
    ms = multiplicity_structure(hp)
    if ms.distinct_count >= 3:
        return ("finite", None)
    n = hp.n
    c0 = hp.coeffs[0]
    if c0 != 0 and all(c == 0 for c in hp.coeffs[1:]):
        return ("infinite", INFINITE_ZERO_CODE)
    if q is not None:
        full = c0 * (HomPoly([1, q - 1]) ** n)
        if hp == full:
            return ("infinite", INFINITE_FULL_SPACE)
        if n % 2 == 0:
            pairs = c0 * (HomPoly([1, 0, q - 1]) ** (n // 2))
            if hp == pairs:
                return ("infinite", INFINITE_SUM_OF_PAIRS)
    return ("infinite", INFINITE_OTHER_TWO_ROOT)


# -- numeric evaluation helpers --------------------------------------------------


def _coeffs_to_mpc(coeffs: Sequence[Fraction]) -> list[mpc]:
    return [mpc(mpf(c.numerator) / mpf(c.denominator)) for c in coeffs]


def _eval_hom(coeffs: Sequence[mpc], x: mpc, y: mpc) -> mpc:
    """Evaluate sum c_i x^(n-i) y^i by Horner in the smaller ratio."""
    n = len(coeffs) - 1
    if abs(x) >= abs(y):
        t = y / x if x != 0 else mpc(0)
        acc = coeffs[n]
        for i in range(n - 1, -1, -1):
            acc = acc * t + coeffs[i]
        return (x ** n) * acc
    t = x / y
    acc = coeffs[0]
    for i in range(1, n + 1):
        acc = acc * t + coeffs[i]
    return (y ** n) * acc


def substitute_numeric(coeffs: Sequence[mpc], m) -> list[mpc]:
    """Coefficients of p(a x + b y, c x + d y) for numeric 2x2 m."""
    (a, b), (c, d) = m
    n = len(coeffs) - 1

    def lin_mul(vec, u, v):
        out = [mpc(0)] * (len(vec) + 1)
        for i, w in enumerate(vec):
            out[i] += w * u
            out[i + 1] += w * v
        return out

    ypow = [mpc(1)]
    acc = [coeffs[0]]
    for j in range(1, n + 1):
        acc = lin_mul(acc, a, b)
        ypow = lin_mul(ypow, c, d)
        cj = coeffs[j]
        if cj != 0:
            for t in range(j + 1):
                acc[t] += cj * ypow[t]
    return acc


# -- candidate scan (float64, vectorized) ----------------------------------------


def _source_triple(v64: np.ndarray) -> tuple[int, int, int]:
    """Indices of the triple maximizing minimum pairwise distance;
    ties broken by the lexicographically smallest index triple (the roots
    are already sorted by (re, im))."""
    d = len(v64)
    best = None
    best_sep = -1.0
    for (i, j, k) in itertools.combinations(range(d), 3):
        s = min(abs(v64[i] - v64[j]), abs(v64[i] - v64[k]), abs(v64[j] - v64[k]))
        if s > best_sep + 1e-15:
            best_sep = s
            best = (i, j, k)
    return best


def _det3(u0, u1, u2, v0, v1, v2, w0, w1, w2):
    return (u0 * (v1 * w2 - v2 * w1)
            - u1 * (v0 * w2 - v2 * w0)
            + u2 * (v0 * w1 - v1 * w0))


def _scan_candidates(v64: np.ndarray, mults: np.ndarray,
                     src: tuple[int, int, int], tau: float) -> list[tuple[int, ...]]:
    """All root permutations induced by maps sending the source triple to
    some ordered target triple and permuting the root set within tau."""
    d = len(v64)
    z1, z2, z3 = v64[src[0]], v64[src[1]], v64[src[2]]
    slots = [np.where(mults == mults[s])[0] for s in src]
    A, B, C = np.meshgrid(slots[0], slots[1], slots[2], indexing="ij")
    A, B, C = A.ravel(), B.ravel(), C.ravel()
    keep = (A != B) & (B != C) & (A != C)
    A, B, C = A[keep], B[keep], C[keep]
    probes = [t for t in range(d) if t not in src][:2]
    perms: list[tuple[int, ...]] = []
    chunk = 200_000
    for lo in range(0, len(A), chunk):
        ai, bi, ci = A[lo:lo + chunk], B[lo:lo + chunk], C[lo:lo + chunk]
        w1, w2, w3 = v64[ai], v64[bi], v64[ci]
        ones = np.ones_like(w1)
        # nullspace of rows [z_i, 1, -w_i z_i, -w_i] via signed 3x3 minors
        a = _det3(ones, ones, ones, -w1 * z1, -w2 * z2, -w3 * z3, -w1, -w2, -w3)
        b = -_det3(z1 * ones, z2 * ones, z3 * ones,
                   -w1 * z1, -w2 * z2, -w3 * z3, -w1, -w2, -w3)
        c = _det3(z1 * ones, z2 * ones, z3 * ones, ones, ones, ones, -w1, -w2, -w3)
        dd = -_det3(z1 * ones, z2 * ones, z3 * ones, ones, ones, ones,
                    -w1 * z1, -w2 * z2, -w3 * z3)
        nrm = np.maximum.reduce([np.abs(a), np.abs(b), np.abs(c), np.abs(dd)])
        ok = nrm > 0
        nrm[~ok] = 1.0
        a, b, c, dd = a / nrm, b / nrm, c / nrm, dd / nrm
        ok &= np.abs(a * dd - b * c) > 1e-9
        for p in probes:
            zp = v64[p]
            den = c * zp + dd
            bad = np.abs(den) < 1e-12
            den[bad] = 1.0
            img = (a * zp + b) / den
            dist = np.abs(img[:, None] - v64[None, :]).min(axis=1)
            ok &= (~bad) & (dist < tau)
            if not ok.any():
                break
        for t in np.nonzero(ok)[0]:
            ga, gb, gc, gd = a[t], b[t], c[t], dd[t]
            den = gc * v64 + gd
            if np.any(np.abs(den) < 1e-12):
                continue
            img = (ga * v64 + gb) / den
            dist = np.abs(img[:, None] - v64[None, :])
            nearest = dist.argmin(axis=1)
            if dist[np.arange(d), nearest].max() >= tau:
                continue
            if len(set(nearest.tolist())) != d:
                continue
            if not np.array_equal(mults[nearest], mults):
                continue
            perms.append(tuple(int(x) for x in nearest))
    return sorted(set(perms))


# -- full-precision verification ---------------------------------------------------


def _matrix_from_triples(z: Sequence[mpc], w: Sequence[mpc], prec: int) -> ProjectiveMatrix:
    """Solve the 3x4 homogeneous system rows [z_i, 1, -w_i z_i, -w_i]."""
    with mp.workprec(prec + 16):
        col0 = [z[0], z[1], z[2]]
        col1 = [mpc(1), mpc(1), mpc(1)]
        col2 = [-w[0] * z[0], -w[1] * z[1], -w[2] * z[2]]
        col3 = [-w[0], -w[1], -w[2]]

        def det3(u, v, wv):
            return (u[0] * (v[1] * wv[2] - v[2] * wv[1])
                    - u[1] * (v[0] * wv[2] - v[2] * wv[0])
                    + u[2] * (v[0] * wv[1] - v[1] * wv[0]))

        a = det3(col1, col2, col3)
        b = -det3(col0, col2, col3)
        c = det3(col0, col1, col3)
        d = -det3(col0, col1, col2)
        return ProjectiveMatrix(a, b, c, d, prec)


def _lambda_point(coeffs: Sequence[mpc], prec: int) -> tuple[mpc, mpc]:
    """Deterministic evaluation point (1, t) with w(1, t) far from zero."""
    one_norm = sum(abs(c) for c in coeffs)
    floor = one_norm * (mpf(2) ** (-(prec // 4)))
    for num, den in [(3, 7), (5, 11), (7, 13), (9, 17), (11, 19), (2, 3),
                     (13, 23), (1, 2), (4, 5), (15, 29)]:
        t = mpc(mpf(num) / mpf(den))
        if abs(_eval_hom(coeffs, mpc(1), t)) > floor:
            return mpc(1), t
    raise _Retry("no usable evaluation point for lambda")


def _verify_element(coeffs: Sequence[mpc], v_mp: Sequence[mpc],
                    perm: tuple[int, ...], src: tuple[int, int, int],
                    tau: mpf, prec: int) -> Optional[SymmetryElement]:
    """Re-derive the matrix at full precision and certify it, or None."""
    n = len(coeffs) - 1
    with mp.workprec(prec + 16):
        z = [v_mp[i] for i in src]
        w = [v_mp[perm[i]] for i in src]
        g = _matrix_from_triples(z, w, prec)
        if abs(g.det()) <= mpf(2) ** (-(prec // 2)):
            return None
        # permutation re-check at working precision
        for t, zt in enumerate(v_mp):
            den = g.c * zt + g.d
            if abs(den) == 0:
                return None
            if abs((g.a * zt + g.b) / den - v_mp[perm[t]]) > tau:
                return None
        # polynomial invariance: lambda at a deterministic point, residual
        # check at n+1 unit-circle samples
        ex, ey = _lambda_point(coeffs, prec)
        lam = (_eval_hom(coeffs, g.a * ex + g.b * ey, g.c * ex + g.d * ey)
               / _eval_hom(coeffs, ex, ey))
        one_norm = sum(abs(c) for c in coeffs)
        thresh = mpf(2) ** (-(prec // 2))
        for t in range(n + 1):
            sy = mp.exp(2j * mp.pi * t / (n + 1))
            gx = g.a + g.b * sy
            gy = g.c + g.d * sy
            lhs = _eval_hom(coeffs, gx, gy)
            rhs = lam * _eval_hom(coeffs, mpc(1), sy)
            scale = one_norm * (max(abs(gx), abs(gy), mpf(1)) ** n) + abs(lam) * one_norm
            if abs(lhs - rhs) / scale > thresh:
                return None
        order = _perm_order(perm)
        g = ProjectiveMatrix(_round_mpc(g.a, prec), _round_mpc(g.b, prec),
                             _round_mpc(g.c, prec), _round_mpc(g.d, prec),
                             prec, _normalized=True)
        return SymmetryElement(proj=g, lam=_round_mpc(lam, prec), order=order,
                               perm=perm)


def _round_mpc(z: mpc, prec: int) -> mpc:
    """Round to exactly prec bits so serialization tags are honest."""
    with mp.workprec(prec):
        return mpc(+z.real, +z.imag)


def _perm_order(perm: tuple[int, ...]) -> int:
    seen = [False] * len(perm)
    order = 1
    for s in range(len(perm)):
        if seen[s]:
            continue
        length = 0
        t = s
        while not seen[t]:
            seen[t] = True
            t = perm[t]
            length += 1
        order = order * length // math.gcd(order, length)
    return order


def _compose_perms(p1: tuple[int, ...], p2: tuple[int, ...]) -> tuple[int, ...]:
    """Permutation of g1 o g2 when p(t) is the index of g(root_t)."""
    return tuple(p1[p2[t]] for t in range(len(p1)))


# -- group identification -----------------------------------------------------------


def _cyclic_census(o: int) -> Counter:
    c = Counter()
    for d in range(1, o + 1):
        if o % d == 0:
            c[d] = sum(1 for t in range(1, d + 1) if math.gcd(t, d) == 1)
    return c


def _dihedral_census(k: int) -> Counter:
    c = _cyclic_census(k)
    c[2] += k
    return c


_A4_CENSUS = Counter({1: 1, 2: 3, 3: 8})
_S4_CENSUS = Counter({1: 1, 2: 9, 3: 8, 4: 6})
_A5_CENSUS = Counter({1: 1, 2: 15, 3: 20, 5: 24})


def identify_group(elements: Sequence[SymmetryElement]) -> IsoType:
    """Blichfeldt type from the exact element-order census."""
    o = len(elements)
    census = Counter(e.order for e in elements)
    if census == _cyclic_census(o):
        return IsoType("cyclic", o)
    if o % 2 == 0 and o >= 4 and census == _dihedral_census(o // 2):
        return IsoType("dihedral", o // 2)
    if o == 12 and census == _A4_CENSUS:
        return IsoType("A4")
    if o == 24 and census == _S4_CENSUS:
        return IsoType("S4")
    if o == 60 and census == _A5_CENSUS:
        return IsoType("A5")
    raise NotBlichfeldtError(
        f"order-{o} census {dict(sorted(census.items()))} matches no finite "
        "subgroup of PGL2(C)")


# -- the main algorithm ---------------------------------------------------------------


def symmetry_group(w: Union[WeightEnumerator, HomPoly], q: Optional[int] = None,
                   prec: int = DEFAULT_PREC, seed: int = 0,
                   prec_cap: int = PREC_CAP) -> SymmetryGroup:
    """Compute the projective symmetry group of a weight enumerator.

    Returns the infinite classification directly when the enumerator has
    fewer than three distinct roots.
    """
    hp, q = _coerce_poly(w, q)
    kind, case = classify_finiteness(hp, q)
    if kind == "infinite":
        return SymmetryGroup(kind="infinite", degree=hp.n, case=case)
    work = prec
    while True:
        try:
            return _finite_group(hp, work, seed, prec_cap)
        except _Retry as exc:
            if work >= prec_cap:
                raise ClosureFailureError(
                    f"search failed at precision cap {prec_cap}: {exc}") from exc
            work = min(2 * work, prec_cap)


def _finite_group(hp: HomPoly, prec: int, seed: int, prec_cap: int) -> SymmetryGroup:
    rs = find_roots(hp, prec, seed, prec_cap)
    v_mp = list(rs.values)
    mults = np.array(rs.multiplicities, dtype=np.int64)
    d = len(v_mp)
    v64 = np.array([complex(z) for z in v_mp], dtype=np.complex128)
    sep64 = float(rs.sep)
    if sep64 < 1e-8:
        raise _Retry("separation too small for the float64 scan tier")
    tau64 = sep64 / 3.0
    src = _source_triple(v64)
    cand_perms = _scan_candidates(v64, mults, src, tau64)

    with mp.workprec(prec + 16):
        coeffs = _coeffs_to_mpc(hp.coeffs)
        tau_mp = rs.sep / 3

    elements: dict[tuple[int, ...], SymmetryElement] = {}
    for perm in cand_perms:
        el = _verify_element(coeffs, v_mp, perm, src, tau_mp, prec)
        if el is not None:
            elements[perm] = el

    ident = tuple(range(d))
    if ident not in elements:
        raise _Retry("identity element failed verification")

    # closure completion on exact permutations; any product whose
    # permutation is new must itself verify as a symmetry
    bound = d * (d - 1) * (d - 2)
    added = 0
    frontier = list(elements)
    while frontier:
        new: list[tuple[int, ...]] = []
        for p1 in list(elements):
            for p2 in frontier:
                comp = _compose_perms(p1, p2)
                if comp not in elements:
                    el = _verify_element(coeffs, v_mp, comp, src, tau_mp, prec)
                    if el is None:
                        raise _Retry("closure completion produced an "
                                     "unverifiable product")
                    elements[comp] = el
                    new.append(comp)
                    if len(elements) > bound:
                        raise _Retry("closure ran past the triple-count bound")
        frontier = new
        added += len(new)
    if added:
        log.debug("closure completion added %d elements missed by the scan", added)

    elems = tuple(elements[p] for p in sorted(elements))
    # numeric closure invariant: products match members projectively
    _check_matrix_closure(elements, prec)

    try:
        iso = identify_group(elems)
    except NotBlichfeldtError:
        if prec >= prec_cap:
            raise
        raise _Retry("census failed Blichfeldt identification") from None

    mult_classes = Counter(int(m) for m in mults)
    perm_bound = 1
    for size in mult_classes.values():
        perm_bound *= math.factorial(size)
    if len(elems) > perm_bound:
        raise _Retry("group larger than the multiplicity-preserving "
                     "permutation bound")
    log.debug("group order %d; crude bound n! * n = %d", len(elems),
              math.factorial(d) * hp.n if d <= 20 else -1)

    return SymmetryGroup(kind="finite", degree=hp.n, elements=elems,
                         iso=iso, prec=prec, roots=rs)


def _check_matrix_closure(elements: dict[tuple[int, ...], SymmetryElement],
                          prec: int) -> None:
    tol = mpf(2) ** (-(prec // 4))
    with mp.workprec(prec + 16):
        for p1, e1 in elements.items():
            for p2, e2 in elements.items():
                comp = _compose_perms(p1, p2)
                target = elements.get(comp)
                if target is None:
                    raise ClosureFailureError("permutation closure broken")
                prod = e1.proj.compose(e2.proj)
                if prod.distance(target.proj) > tol:
                    raise _Retry("matrix product strayed from its member")


# -- scalar lifts -----------------------------------------------------------------


def lift_scalars(group: SymmetryGroup) -> dict:
    """Full GL2 stabilizer order and one scaling representative per element.

    Every projective element lifts to exactly n scalings c*A with
    c^n * lambda_A = 1, so the full order is n * |projective group|.
    """
    if group.kind != "finite":
        raise ValueError("scalar lifts only apply to finite groups")
    n = group.degree
    reps = []
    with mp.workprec((group.prec or DEFAULT_PREC) + 16):
        for el in group.elements:
            c = mp.power(el.lam, mpf(-1) / n)
            reps.append({"scaling": c, "count": n})
    return {
        "degree": n,
        "proj_order": group.proj_order,
        "full_order": n * group.proj_order,
        "elements": reps,
    }


# -- cross ratios and triviality certificates ----------------------------------------


def cross_ratio(z1, z2, z3, z4):
    """[z1,z2,z3,z4] = (z1-z3)(z2-z4) / ((z1-z4)(z2-z3))."""
    pts = [mpc(z1), mpc(z2), mpc(z3), mpc(z4)]
    for i in range(4):
        for j in range(i + 1, 4):
            if pts[i] == pts[j]:
                raise DegenerateTupleError("cross ratio needs 4 distinct points")
    num = (pts[0] - pts[2]) * (pts[1] - pts[3])
    den = (pts[0] - pts[3]) * (pts[1] - pts[2])
    return num / den


@dataclass(frozen=True)
class CrossRatioCertificate:
    """Witness that the projective symmetry group is trivial: two critical
    4-tuples sharing their first three roots (scalar lifts of the identity
    always remain in GL2)."""

    indices: tuple[int, int, int, int, int]
    tuple_a: tuple[int, int, int, int]
    tuple_b: tuple[int, int, int, int]
    ratio_a: mpc
    ratio_b: mpc


_CERT_MAX_ROOTS = 64


def _v4_orbit(t: tuple[int, int, int, int]) -> set[tuple[int, int, int, int]]:
    i, j, k, l = t
    return {(i, j, k, l), (j, i, l, k), (k, l, i, j), (l, k, j, i)}


def trivial_certificate(rs: RootSet,
                        prec: Optional[int] = None) -> Optional[CrossRatioCertificate]:
    """Search for two overlapping critical 4-tuples; None when not found.

    The all-tuples comparison is quadratic in the 4-tuple count, so the
    search is limited to root sets of at most 64 distinct roots; larger
    inputs return None (the main algorithm decides those directly).
    """
    vals = rs.values
    d = len(vals)
    if d < 5:
        raise ValueError("a certificate needs at least five distinct roots")
    if d > _CERT_MAX_ROOTS:
        return None
    prec = prec or rs.prec
    v64 = np.array([complex(z) for z in vals], dtype=np.complex128)

    idx = np.arange(d)
    ii, jj, kk, ll = np.meshgrid(idx, idx, idx, idx, indexing="ij")
    distinct = ((ii != jj) & (ii != kk) & (ii != ll)
                & (jj != kk) & (jj != ll) & (kk != ll))
    zi, zj, zk, zl = (v64[x] for x in (ii, jj, kk, ll))
    with np.errstate(divide="ignore", invalid="ignore"):
        cr = ((zi - zk) * (zj - zl)) / ((zi - zl) * (zj - zk))
    cr[~distinct] = np.nan

    tight = 1e-7

    def critical_f64(t: tuple[int, int, int, int]) -> bool:
        val = cr[t]
        matches = np.argwhere(np.abs(cr - val) < tight)
        found = {tuple(int(x) for x in m) for m in matches}
        return found == _v4_orbit(t)

    def confirm_mp(t: tuple[int, int, int, int]) -> bool:
        with mp.workprec(prec + 16):
            val = cross_ratio(*(vals[x] for x in t))
            wide = np.argwhere(np.abs(cr - complex(val)) < 1e-4)
            tol = (1 + abs(val)) * (mpf(2) ** (-(prec // 4)))
            orbit = _v4_orbit(t)
            for m in wide:
                tup = tuple(int(x) for x in m)
                other = cross_ratio(*(vals[x] for x in tup))
                if abs(other - val) <= tol and tup not in orbit:
                    return False
                if abs(other - val) > tol and tup in orbit:
                    return False
            return True

    for (i, j, k) in itertools.permutations(range(d), 3):
        hits = []
        for l in range(d):
            if l in (i, j, k):
                continue
            t = (i, j, k, l)
            if critical_f64(t) and confirm_mp(t):
                hits.append(l)
                if len(hits) == 2:
                    ta = (i, j, k, hits[0])
                    tb = (i, j, k, hits[1])
                    with mp.workprec(prec + 16):
                        ra = cross_ratio(*(vals[x] for x in ta))
                        rb = cross_ratio(*(vals[x] for x in tb))
                    return CrossRatioCertificate(
                        indices=(i, j, k, hits[0], hits[1]),
                        tuple_a=ta, tuple_b=tb, ratio_a=ra, ratio_b=rb)
    return None


# -- the oddball anti-invariance test --------------------------------------------------


def check_v_antiinvariance(w: Union[WeightEnumerator, HomPoly],
                           prec: int = DEFAULT_PREC) -> Optional[int]:
    """Sign s with w(v(x,y)) = s*w(x,y) for the order-2 map
    v = (1/sqrt2) [[1, z8], [1/z8, -1]] (z8 a primitive 8th root of unity),
    or None when w is neither invariant nor anti-invariant."""
    hp, _ = _coerce_poly(w, None)
    with mp.workprec(prec + 16):
        coeffs = _coeffs_to_mpc(hp.coeffs)
        z8 = mp.exp(2j * mp.pi / 8)
        s = 1 / mp.sqrt(2)
        sub = substitute_numeric(coeffs, [[s, s * z8], [s / z8, -s]])
        scale = max(abs(c) for c in coeffs)
        thresh = (mpf(2) ** (-(prec // 2))) * scale
        if all(abs(a - b) <= thresh for a, b in zip(sub, coeffs)):
            return +1
        if all(abs(a + b) <= thresh for a, b in zip(sub, coeffs)):
            return -1
        return None


# -- JSON emission ---------------------------------------------------------------------


def _mpf_str(x: mpf, prec: int) -> str:
    dps = max(17, int(prec * 0.30103) + 5)
    with mp.workprec(prec + 16):
        return mp.nstr(x, dps, strip_zeros=False)


def complex_to_str(z: mpc, prec: int) -> str:
    return f"{_mpf_str(z.real, prec)},{_mpf_str(z.imag, prec)}@{prec}"


def complex_from_str(s: str) -> tuple[mpc, int]:
    body, prec_s = s.rsplit("@", 1)
    re_s, im_s = body.split(",")
    prec = int(prec_s)
    with mp.workprec(prec):
        return mpc(mpf(re_s), mpf(im_s)), prec


def group_from_json(payload: dict) -> dict:
    """Parse an emitted group back to values; inverse of group_to_json up
    to the non-serialized root set."""
    if payload["kind"] == "infinite":
        return dict(payload)
    out = dict(payload)
    out["iso"] = IsoType(payload["iso"]["type"], payload["iso"]["parameter"])
    elements = []
    for el in payload["elements"]:
        entries = [complex_from_str(s) for s in el["matrix"]]
        lam, prec = complex_from_str(el["lambda"])
        elements.append({
            "matrix": [z for z, _ in entries],
            "lambda": lam,
            "order": el["order"],
            "prec": prec,
        })
    out["elements"] = elements
    return out


def group_to_json(group: SymmetryGroup, certificate=None) -> dict:
    if group.kind == "infinite":
        return {"kind": "infinite", "case": group.case, "degree": group.degree}
    prec = group.prec or DEFAULT_PREC
    out = {
        "kind": "finite",
        "degree": group.degree,
        "proj_order": group.proj_order,
        "full_order": group.full_order,
        "iso": {"type": group.iso.family, "parameter": group.iso.parameter},
        "elements": [
            {
                "matrix": [complex_to_str(e, prec) for e in el.proj.entries()],
                "lambda": complex_to_str(el.lam, prec),
                "order": el.order,
            }
            for el in group.elements
        ],
    }
    if certificate is not None:
        out["certificates"] = [{
            "indices": list(certificate.indices),
            "tuple_a": list(certificate.tuple_a),
            "tuple_b": list(certificate.tuple_b),
        }]
    return out
