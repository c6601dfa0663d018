"""Certified arbitrary-precision roots of weight-enumerator polynomials.

Root finding only ever runs on the exact squarefree factors produced by
the Yun decomposition, so every numerical root is simple and multiplicities
are attached exactly, never estimated.  The solver is Aberth-Ehrlich
simultaneous iteration: deterministic perturbed-circle initialization at
the bottom precision rung, then refinement sweeps at doubling precision
until the corrections, residuals and pairwise separation certify the
result at the requested precision.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import mpmath
import numpy as np
from mpmath import mp, mpc, mpf

from .homopoly import HomPoly, multiplicity_structure

DEFAULT_PREC = 256
PREC_CAP = 4096
MAX_SWEEPS = 600


class PrecisionExhaustedError(RuntimeError):
    """Residual/separation certification failed at the precision cap."""


@dataclass(frozen=True)
class RootSet:
    """Distinct roots of p(x,1) with exact multiplicities.

    ``roots`` is sorted by (re, im); ``includes_zero`` marks the projective
    point (0:1), which is carried as an exact zero entry.  ``sep`` is the
    minimum pairwise distance and ``residual_bound`` the largest certified
    relative residual among the computed (nonzero) roots.
    """

    roots: tuple[tuple[mpc, int], ...]
    includes_zero: bool
    sep: mpf
    residual_bound: mpf
    prec: int

    @property
    def values(self) -> tuple[mpc, ...]:
        return tuple(z for z, _ in self.roots)

    @property
    def multiplicities(self) -> tuple[int, ...]:
        return tuple(m for _, m in self.roots)


def _to_float_coeffs(coeffs: list[Fraction]) -> np.ndarray:
    """Normalized float64 coefficients (max magnitude 1); roots unchanged."""
    top = max(abs(c) for c in coeffs)
    return np.array([float(c / top) for c in coeffs], dtype=np.float64)


def _initial_circle(deg: int, radius: float, seed: int) -> np.ndarray:
    rng = np.random.default_rng(seed)
    jitter = rng.uniform(-0.25, 0.25, deg)
    angles = 2.0 * np.pi * ((np.arange(deg) + 0.37) / deg + jitter / deg)
    return radius * np.exp(1j * angles)


def _aberth_float(coeffs: np.ndarray, seed: int) -> np.ndarray:
    """Float64 Aberth-Ehrlich from the deterministic perturbed circle."""
    deg = len(coeffs) - 1
    lead = coeffs[0]
    radius = 2.0 * max(abs(coeffs[i] / lead) ** (1.0 / i)
                       for i in range(1, deg + 1) if coeffs[i] != 0)
    z = _initial_circle(deg, radius, seed)
    dcoeffs = coeffs[:-1] * np.arange(deg, 0, -1)
    for _ in range(MAX_SWEEPS):
        pv = np.polyval(coeffs, z)
        dv = np.polyval(dcoeffs, z)
        dv = np.where(dv == 0, 1e-300, dv)
        ratio = pv / dv
        diff = z[:, None] - z[None, :]
        np.fill_diagonal(diff, 1.0)
        diff = np.where(diff == 0, 1e-300, diff)
        inv = 1.0 / diff
        np.fill_diagonal(inv, 0.0)
        s = inv.sum(axis=1)
        denom = 1.0 - ratio * s
        denom = np.where(denom == 0, 1e-300, denom)
        corr = ratio / denom
        z = z - corr
        if not np.all(np.isfinite(z)):
            bad = ~np.isfinite(z)
            z[bad] = (z + corr)[bad]  # undo the exploding step
            break
        if np.max(np.abs(corr) / np.maximum(np.abs(z), 1.0)) < 1e-14:
            break
    return z


def _horner(coeffs, z):
    acc = coeffs[0]
    for c in coeffs[1:]:
        acc = acc * z + c
    return acc


def _aberth_refine_mp(coeffs_mp, z: list[mpc], prec: int) -> tuple[list[mpc], mpf]:
    """Refine simple roots at working precision; returns roots and the
    largest final correction (the cluster radius).

    The sweep cap is generous because tightly clustered pairs converge
    only linearly until the iterates resolve the cluster; ordinary inputs
    exit after a handful of sweeps.
    """
    deg = len(coeffs_mp) - 1
    dcoeffs = [coeffs_mp[i] * (deg - i) for i in range(deg)]
    target = mpf(2) ** (-(prec // 2))
    last_corr = mpf(1)
    with mp.workprec(prec + 32):
        z = [mpc(v) for v in z]
        for _ in range(200):
            max_corr = mpf(0)
            newz = list(z)
            for j in range(deg):
                pv = _horner(coeffs_mp, z[j])
                dv = _horner(dcoeffs, z[j])
                if dv == 0:
                    dv = mpf(2) ** (-prec)
                ratio = pv / dv
                s = mpc(0)
                for t in range(deg):
                    if t != j:
                        gap = z[j] - z[t]
                        if gap == 0:
                            gap = mpf(2) ** (-prec)
                        s += 1 / gap
                denom = 1 - ratio * s
                if denom == 0:
                    denom = mpf(2) ** (-prec)
                corr = ratio / denom
                newz[j] = z[j] - corr
                rel = abs(corr) / max(abs(newz[j]), mpf(1))
                if rel > max_corr:
                    max_corr = rel
            z = newz
            last_corr = max_corr
            if max_corr < target:
                break
        return z, last_corr


def _relative_residual(coeffs_mp, z: mpc, one_norm: mpf) -> mpf:
    deg = len(coeffs_mp) - 1
    scale = one_norm * max(abs(z), mpf(1)) ** deg
    return abs(_horner(coeffs_mp, z)) / scale


def find_roots(p: HomPoly, prec: int = DEFAULT_PREC, seed: int = 0,
               prec_cap: int = PREC_CAP) -> RootSet:
    """Distinct complex roots of p(x,1) with exact multiplicities.

    The point (1:0) never occurs for code enumerators (their leading
    coefficient is 1) and is rejected here; (0:1) is returned as an exact
    zero root.
    """
    if p.is_zero:
        raise ValueError("zero polynomial")
    ms = multiplicity_structure(p)
    entries: list[tuple[mpc, int]] = []
    numeric: list[tuple[list[Fraction], int]] = []
    includes_zero = False
    for fac, mult in ms.factors:
        if fac.coeffs == (Fraction(0), Fraction(1)):  # factor y: root at (1:0)
            raise ValueError("root at (1:0): leading coefficient vanishes")
        if fac.coeffs == (Fraction(1), Fraction(0)):  # factor x: root at (0:1)
            includes_zero = True
            entries.append((mpc(0), mult))
            continue
        numeric.append((list(fac.coeffs), mult))

    # deterministic float64 stage once per factor; later rungs warm-start
    # from the previous rung so tight clusters keep their progress
    approx: list[list[mpc]] = [
        [mpc(z) for z in _aberth_float(_to_float_coeffs(coeffs), seed)]
        for coeffs, _ in numeric]
    work = prec
    while True:
        solved: list[tuple[mpc, int]] = []
        worst_resid = mpf(0)
        cluster = mpf(2) ** (-work)
        ok = True
        for fi, (coeffs, mult) in enumerate(numeric):
            z0 = approx[fi]
            top = max(abs(c) for c in coeffs)
            deg = len(coeffs) - 1
            with mp.workprec(work + 32):
                coeffs_mp = [mpc(mpf((c / top).numerator) / mpf((c / top).denominator))
                             for c in coeffs]
                dcoeffs_mp = [coeffs_mp[i] * (deg - i) for i in range(deg)]
                one_norm = sum(abs(c) for c in coeffs_mp)
                zs, corr = _aberth_refine_mp(coeffs_mp, list(z0), work)
                approx[fi] = zs
                if corr > mpf(2) ** (-(work // 2)):
                    ok = False
                    break
                for z in zs:
                    r = _relative_residual(coeffs_mp, z, one_norm)
                    if r > worst_resid:
                        worst_resid = r
                    # Weierstrass-style inclusion radius deg * |p/p'|:
                    # the residual alone underestimates error near clusters
                    dv = abs(_horner(dcoeffs_mp, z))
                    newton = (abs(_horner(coeffs_mp, z)) / dv if dv > 0
                              else mpf("inf"))
                    if deg * newton > cluster:
                        cluster = deg * newton
                solved.extend((z, mult) for z in zs)
        if ok and worst_resid > mpf(2) ** (-(work // 2)):
            ok = False
        if ok:
            allroots = entries + solved
            with mp.workprec(work + 32):
                sep = _min_separation(allroots)
                if len(allroots) > 1 and sep <= 3 * cluster:
                    ok = False
        if ok:
            roots = tuple(sorted(entries + solved,
                                 key=lambda zm: (zm[0].real, zm[0].imag)))
            return RootSet(roots=roots, includes_zero=includes_zero,
                           sep=sep if len(roots) > 1 else mpf("inf"),
                           residual_bound=worst_resid, prec=work)
        if work >= prec_cap:
            raise PrecisionExhaustedError(
                f"could not certify roots at precision cap {prec_cap}")
        work = min(2 * work, prec_cap)


def _min_separation(roots: list[tuple[mpc, int]]) -> mpf:
    vals = [z for z, _ in roots]
    best = mpf("inf")
    for i in range(len(vals)):
        for j in range(i + 1, len(vals)):
            d = abs(vals[i] - vals[j])
            if d < best:
                best = d
    return best


def pairwise_separation(rs: RootSet) -> mpf:
    """Minimum distance over distinct root pairs (zero root included)."""
    if len(rs.roots) < 2:
        raise ValueError("separation needs at least two distinct roots")
    return _min_separation(list(rs.roots))


def _frac_to_mpf(x: Fraction) -> mpf:
    return mpf(x.numerator) / mpf(x.denominator)


def reconstruct_relative_error(p: HomPoly, rs: RootSet) -> mpf:
    """Coefficient error of prod (z - z_i)^m_i against p(z,1)/lead.

    Diagnostic used by the verification suite.
    """
    with mp.workprec(rs.prec + 32):
        poly = [mpc(1)]  # coefficients, leading first
        for z, mult in rs.roots:
            for _ in range(mult):
                nxt = [mpc(0)] * (len(poly) + 1)
                for t, c in enumerate(poly):
                    nxt[t] += c
                    nxt[t + 1] -= c * z
                poly = nxt
        lead = _frac_to_mpf(p.coeffs[0])
        target = [_frac_to_mpf(c) / lead for c in p.coeffs]
        scale = max(abs(c) for c in target)
        err = max(abs(a - b) for a, b in zip(poly, target))
        return err / scale
