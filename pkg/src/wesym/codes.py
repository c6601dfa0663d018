"""Linear codes over small finite fields and their weight enumerators.

The enumerator kernel visits all q^k codewords through the modular q-ary
Gray bijection: index i maps to the codeword sum_j gray_digit_j(i) * row_j,
and incrementing i changes a single Gray digit by +1 mod q, i.e. adds one
scalar multiple of one generator row.  The codeword at any starting index
is computed directly from the index digits, so the index space can be cut
into disjoint ranges whose histograms are summed -- the result does not
depend on the partition.

Aligned blocks of q^k2 consecutive indices cover exactly the coset of the
span of the low k2 rows shifted by the block's prefix word, so large
ranges are histogrammed with a vectorized suffix table instead of the
scalar walk; both paths produce identical counts.
"""

from __future__ import annotations

import hashlib
import math
import os
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .fields import Field, field, field_from_order
from .homopoly import HomPoly

DEFAULT_BUDGET = 1 << 32
LENGTH_CAP = 1 << 20


class RaggedRowsError(ValueError):
    """Generator rows do not all have the same length."""


class RankDeficientError(ValueError):
    """Generator rows are linearly dependent."""


class FieldMismatchError(ValueError):
    """Operands live over different fields."""


class UnknownNameError(KeyError):
    """Catalog lookup for an unknown code name."""


class TooLargeError(RuntimeError):
    """Enumeration size exceeds the configured budget."""

    def __init__(self, size: int, budget: int, message: str = ""):
        self.size = size
        self.budget = budget
        super().__init__(message or f"enumeration of {size} codewords exceeds budget {budget}")


class NonIntegerResultError(ArithmeticError):
    """MacWilliams transform did not divide exactly: the input is not the
    enumerator of an F_q-linear code of the stated dimension."""


@dataclass(frozen=True)
class WeightEnumerator:
    """Exact weight distribution A_0..A_n of a degree-n enumerator."""

    n: int
    coeffs: tuple[int, ...]
    q: Optional[int] = None
    k: Optional[int] = None

    def __post_init__(self):
        if len(self.coeffs) != self.n + 1:
            raise ValueError("coefficient vector must have length n+1")
        if any(c < 0 for c in self.coeffs):
            raise ValueError("weight counts must be nonnegative")
        if self.q is not None and self.k is not None:
            total = self.q ** self.k
            if sum(self.coeffs) != total:
                raise ValueError(
                    f"coefficients sum to {sum(self.coeffs)}, expected q^k = {total}")

    def as_hompoly(self) -> HomPoly:
        return HomPoly(self.coeffs)

    def __repr__(self) -> str:
        terms = [f"{c}*x^{self.n - i}y^{i}" for i, c in enumerate(self.coeffs) if c]
        return " + ".join(terms) if terms else "0"


class LinearCode:
    """A linear [n, k] code given by a full-rank generator matrix.

    The zero code is the permitted degenerate case k = 0 (empty matrix).
    Instances are immutable values.
    """

    def __init__(self, fld: Field, gen: np.ndarray, name: Optional[str] = None,
                 _skip_rank_check: bool = False):
        gen = np.ascontiguousarray(np.asarray(gen, dtype=np.uint16))
        if gen.ndim != 2:
            raise RaggedRowsError("generator must be a rectangular matrix")
        k, n = gen.shape
        if k > 0 and np.any(gen >= fld.q):
            raise ValueError("generator entries must be element indices < q")
        if k > 0 and not _skip_rank_check:
            if _rank(fld, gen) != k:
                raise RankDeficientError(
                    f"generator rows are linearly dependent (rank < {k})")
        if k > n:
            raise ValueError(f"dimension {k} exceeds length {n}")
        self.field = fld
        self.gen = gen
        self.gen.setflags(write=False)
        self.n = n
        self.k = k
        self.name = name

    def __repr__(self) -> str:
        tag = f" {self.name!r}" if self.name else ""
        return f"LinearCode([{self.n},{self.k}] over GF({self.field.q}){tag})"


# -- linear algebra over a Field ----------------------------------------------


def _rref(fld: Field, mat: np.ndarray) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form and pivot columns."""
    m = np.array(mat, dtype=np.uint16)
    rows, cols = m.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        sel = None
        for i in range(r, rows):
            if m[i, c] != 0:
                sel = i
                break
        if sel is None:
            continue
        if sel != r:
            m[[r, sel]] = m[[sel, r]]
        inv = fld.inv(int(m[r, c]))
        if inv != 1:
            m[r] = fld.vscale(inv, m[r])
        for i in range(rows):
            if i != r and m[i, c] != 0:
                coef = fld.neg(int(m[i, c]))
                m[i] = fld.vadd(m[i], fld.vscale(coef, m[r]))
        pivots.append(c)
        r += 1
    return m[:r], pivots


def _rank(fld: Field, mat: np.ndarray) -> int:
    return _rref(fld, mat)[0].shape[0]


# -- constructions -------------------------------------------------------------


def code_from_matrix(fld: Field, rows: Sequence[Sequence[int]],
                     name: Optional[str] = None) -> LinearCode:
    """Build a code from user rows; dependent rows are rejected, not reduced."""
    rows = list(rows)
    if not rows:
        return LinearCode(fld, np.zeros((0, 0), dtype=np.uint16), name)
    n = len(rows[0])
    if any(len(r) != n for r in rows):
        raise RaggedRowsError("all generator rows must have the same length")
    return LinearCode(fld, np.array(rows, dtype=np.uint16), name)


def _points(fld: Field, m: int) -> np.ndarray:
    """All q^m points of F_q^m; point i has coordinate j = (i // q^j) % q."""
    q = fld.q
    if m == 0:
        return np.zeros((1, 0), dtype=np.uint16)
    idx = np.arange(q ** m, dtype=np.int64)
    return np.stack([((idx // q ** j) % q).astype(np.uint16) for j in range(m)], axis=1)


def _monomial_row(fld: Field, pts: np.ndarray, exps: Sequence[int]) -> np.ndarray:
    row = np.ones(pts.shape[0], dtype=np.uint16)
    for j, e in enumerate(exps):
        if e == 0:
            continue
        col = pts[:, j].astype(np.uint16)
        powed = np.array([fld.pow(int(t), e) for t in range(fld.q)], dtype=np.uint16)[col]
        mask = row != 0
        out = np.zeros_like(row)
        if fld.mul_table is not None:
            out[mask] = fld.mul_table[row[mask], powed[mask]]
        else:
            out[mask] = [fld.mul(int(a), int(b))
                         for a, b in zip(row[mask], powed[mask])]
        row = out
    return row


def _reduced_exponents(q: int, m: int, r: int):
    """Exponent tuples with each entry <= q-1 and total degree <= r."""
    cap = min(r, m * (q - 1))

    def rec(prefix, remaining, budget):
        if remaining == 0:
            yield tuple(prefix)
            return
        for e in range(min(q - 1, budget) + 1):
            yield from rec(prefix + [e], remaining - 1, budget - e)

    return sorted(rec([], m, cap))


def reed_muller(fld: Field, r: int, m: int) -> LinearCode:
    """Evaluations of all reduced monomials of degree <= r on F_q^m."""
    if r < 0 or m < 1:
        raise ValueError("need r >= 0 and m >= 1")
    q = fld.q
    if q ** m > LENGTH_CAP:
        raise TooLargeError(q ** m, LENGTH_CAP, f"length q^m = {q ** m} exceeds cap")
    pts = _points(fld, m)
    rows = [_monomial_row(fld, pts, e) for e in _reduced_exponents(q, m, r)]
    gen = np.array(rows, dtype=np.uint16)
    name = f"rm q={q} r={r} m={m}"
    # reduced monomials are linearly independent as functions on F_q^m
    return LinearCode(fld, gen, name, _skip_rank_check=True)


def _projective_points(fld: Field, m: int) -> np.ndarray:
    """Representatives of P^m(F_q): first nonzero coordinate 1, sorted
    lexicographically as coordinate tuples."""
    q = fld.q
    reps = []
    for t in range(m + 1):
        tail = _points(fld, m - t)
        for row in tail:
            reps.append((0,) * t + (1,) + tuple(int(x) for x in row))
    reps.sort()
    return np.array(reps, dtype=np.uint16)


def projective_reed_muller(fld: Field, r: int, m: int) -> LinearCode:
    """Row space of the degree-exactly-r monomial evaluations on P^m(F_q)."""
    if r < 1 or m < 1:
        raise ValueError("need r >= 1 and m >= 1")
    q = fld.q
    n = (q ** (m + 1) - 1) // (q - 1)
    if n > LENGTH_CAP:
        raise TooLargeError(n, LENGTH_CAP, f"length {n} exceeds cap")
    pts = _projective_points(fld, m)

    def exps_exact(prefix, remaining, budget, cap):
        if remaining == 0:
            if budget == 0:
                yield tuple(prefix)
            return
        for e in range(min(cap, budget) + 1):
            yield from exps_exact(prefix + [e], remaining - 1, budget - e, cap)

    cap = q - 1 if r <= (m + 1) * (q - 1) else r
    exps = sorted(exps_exact([], m + 1, r, cap))
    rows = np.array([_monomial_row(fld, pts, e) for e in exps], dtype=np.uint16)
    reduced, _ = _rref(fld, rows)
    return LinearCode(fld, reduced, f"prm q={q} r={r} m={m}", _skip_rank_check=True)


def dual(code: LinearCode) -> LinearCode:
    """The orthogonal code, built from the reduced generator's null space.

    Columns are never permuted, so dual(dual(C)) has exactly C's row space.
    """
    fld = code.field
    n = code.n
    if code.k == 0:
        return LinearCode(fld, np.eye(n, dtype=np.uint16),
                          _skip_rank_check=True)
    rref, pivots = _rref(fld, code.gen)
    k = rref.shape[0]
    free = [c for c in range(n) if c not in pivots]
    h = np.zeros((n - k, n), dtype=np.uint16)
    for idx, c in enumerate(free):
        h[idx, c] = 1
        for i, pc in enumerate(pivots):
            h[idx, pc] = fld.neg(int(rref[i, c]))
    return LinearCode(fld, h, _skip_rank_check=True)


def direct_sum(c1: LinearCode, c2: LinearCode) -> LinearCode:
    if c1.field != c2.field:
        raise FieldMismatchError("direct sum needs codes over the same field")
    gen = np.zeros((c1.k + c2.k, c1.n + c2.n), dtype=np.uint16)
    gen[:c1.k, :c1.n] = c1.gen
    gen[c1.k:, c1.n:] = c2.gen
    return LinearCode(c1.field, gen, _skip_rank_check=True)


# -- catalog -------------------------------------------------------------------


def _cyclic_generator_poly(p: int, length: int, degree: int) -> list[int]:
    """Smallest-encoding monic degree-d divisor of x^length - 1 over GF(p).

    Coefficients are returned constant term first.
    """
    fld = field(p)
    target = [0] * (length + 1)
    target[0] = fld.neg(1)  # -1 constant term
    target[length] = 1

    def poly_div_exact(f, g):
        f = list(f)
        dg = len(g) - 1
        out = [0] * (len(f) - dg)
        for i in range(len(f) - 1, dg - 1, -1):
            c = f[i]
            if c == 0:
                continue
            out[i - dg] = c
            for j in range(dg + 1):
                f[i - dg + j] = fld.sub(f[i - dg + j], fld.mul(c, g[j]))
        return out if all(c == 0 for c in f[:dg]) else None

    for enc in range(p ** degree):
        low = []
        x = enc
        for _ in range(degree):
            low.append(x % p)
            x //= p
        cand = low + [1]
        if cand[0] == 0:
            continue
        if poly_div_exact(target, cand) is not None:
            return cand
    raise AssertionError(f"x^{length}-1 has no degree-{degree} factor over GF({p})")


def _cyclic_code(p: int, length: int, gen_poly: list[int]) -> np.ndarray:
    k = length - (len(gen_poly) - 1)
    gen = np.zeros((k, length), dtype=np.uint16)
    for i in range(k):
        gen[i, i:i + len(gen_poly)] = gen_poly
    return gen


def _extend_parity(fld: Field, gen: np.ndarray) -> np.ndarray:
    """Append the coordinate making every coordinate-sum vanish."""
    k, n = gen.shape
    out = np.zeros((k, n + 1), dtype=np.uint16)
    out[:, :n] = gen
    for i in range(k):
        s = 0
        for j in range(n):
            s = fld.add(s, int(gen[i, j]))
        out[i, n] = fld.neg(s)
    return out


_X2 = [
    [1, 0, 0, 1, 1, 1],
    [0, 1, 0, 1, 1, 1],
    [0, 0, 1, 1, 1, 1],
]

_X3 = [
    [1, 1, 1, 0, 0, 0, 0],
    [1, 1, 1, 0, 0, 0, 0],
    [1, 1, 1, 0, 0, 0, 0],
    [1, 0, 0, 1, 1, 1, 1],
    [1, 0, 0, 1, 1, 1, 1],
    [1, 0, 0, 1, 1, 1, 1],
    [1, 0, 0, 0, 0, 0, 0],
]

_X4 = [
    [1, 1, 1, 1, 1, 0, 0],
    [1, 1, 1, 1, 1, 0, 0],
    [1, 1, 1, 1, 1, 0, 0],
    [1, 1, 1, 1, 1, 0, 0],
    [1, 1, 1, 1, 0, 1, 0],
    [1, 1, 1, 1, 0, 1, 0],
    [1, 1, 1, 1, 1, 1, 1],
]

_X5 = [
    [1, 0, 1, 0, 1, 0, 0],
    [1, 0, 1, 0, 1, 0, 0],
    [1, 0, 1, 0, 1, 0, 0],
    [1, 0, 1, 0, 1, 0, 0],
    [1, 1, 1, 0, 1, 0, 1],
    [1, 1, 1, 0, 1, 0, 1],
    [1, 1, 1, 1, 1, 1, 1],
]


def _identity_block(x_rows: list[list[int]]) -> np.ndarray:
    k = len(x_rows)
    gen = np.zeros((k, 2 * k), dtype=np.uint16)
    gen[:, :k] = np.eye(k, dtype=np.uint16)
    gen[:, k:] = np.array(x_rows, dtype=np.uint16)
    return gen


def named_code(name: str, q: Optional[int] = None, n: Optional[int] = None) -> LinearCode:
    """Catalog constructions; names match the CLI code-spec grammar."""
    key = name.lower()
    if key == "repetition":
        if q is None or n is None:
            raise ValueError("repetition needs q= and n=")
        fld = field_from_order(q)
        return LinearCode(fld, np.ones((1, n), dtype=np.uint16),
                          f"repetition q={q} n={n}", _skip_rank_check=True)
    if key == "hamming8":
        c = reed_muller(field(2), 1, 3)
        return LinearCode(c.field, c.gen, "hamming8", _skip_rank_check=True)
    if key == "golay24":
        g = _cyclic_generator_poly(2, 23, 11)
        gen = _extend_parity(field(2), _cyclic_code(2, 23, g))
        return LinearCode(field(2), gen, "golay24", _skip_rank_check=True)
    if key == "golay12_ternary":
        g = _cyclic_generator_poly(3, 11, 5)
        gen = _extend_parity(field(3), _cyclic_code(3, 11, g))
        return LinearCode(field(3), gen, "golay12_ternary", _skip_rank_check=True)
    if key == "x1":
        return LinearCode(field(2), np.array([[1, 1]], dtype=np.uint16), "X1",
                          _skip_rank_check=True)
    if key == "x2":
        return LinearCode(field(2), np.array(_X2, dtype=np.uint16), "X2",
                          _skip_rank_check=True)
    if key in ("x3", "x4", "x5"):
        block = {"x3": _X3, "x4": _X4, "x5": _X5}[key]
        return LinearCode(field(2), _identity_block(block), name.upper(),
                          _skip_rank_check=True)
    raise UnknownNameError(name)


# -- weight enumeration --------------------------------------------------------


def _gray_digits(index: int, q: int, k: int) -> list[int]:
    b = []
    x = index
    for _ in range(k + 1):
        b.append(x % q)
        x //= q
    return [(b[j] - b[j + 1]) % q for j in range(k)]


def _codeword_at(fld: Field, gen: np.ndarray, index: int) -> np.ndarray:
    """Codeword of the Gray bijection at an arbitrary index."""
    k = gen.shape[0]
    word = np.zeros(gen.shape[1], dtype=np.uint16)
    for j, g in enumerate(_gray_digits(index, fld.q, k)):
        if g:
            word = fld.vadd(word, fld.vscale(g, gen[j]))
    return word


def _enumerate_scalar(fld: Field, gen: np.ndarray, start: int, stop: int,
                      hist: np.ndarray) -> None:
    """Reference walk over [start, stop) in Gray order, one row-add per step."""
    q = fld.q
    k, n = gen.shape
    # delta[s] = field difference between the elements indexed s+1 mod q and s
    delta = [fld.sub((s + 1) % q, s) for s in range(q)]
    steps = [[fld.vscale(delta[s], gen[j]) for s in range(q)] for j in range(k)]
    word = _codeword_at(fld, gen, start)
    weight = int(np.count_nonzero(word))
    gray = _gray_digits(start, q, k)
    hist[weight] += 1
    i = start
    while i + 1 < stop:
        # digit that bumps: count trailing q-1 digits of i
        t = 0
        x = i
        while x % q == q - 1:
            t += 1
            x //= q
        step = steps[t][gray[t]]
        gray[t] = (gray[t] + 1) % q
        new = fld.vadd(word, step)
        weight += int(np.count_nonzero(new)) - int(np.count_nonzero(word))
        word = new
        hist[weight] += 1
        i += 1


def iter_codewords(code: LinearCode):
    """Yield every codeword once, walking the Gray enumeration order.

    The yielded array is a shared buffer; copy it to keep it.
    """
    fld = code.field
    q, k = fld.q, code.k
    word = np.zeros(code.n, dtype=np.uint16)
    if k == 0:
        yield word
        return
    delta = [fld.sub((s + 1) % q, s) for s in range(q)]
    steps = [[fld.vscale(delta[s], code.gen[j]) for s in range(q)] for j in range(k)]
    gray = [0] * k
    yield word
    for i in range(q ** k - 1):
        t = 0
        x = i
        while x % q == q - 1:
            t += 1
            x //= q
        word = fld.vadd(word, steps[t][gray[t]])
        gray[t] = (gray[t] + 1) % q
        yield word


def _suffix_table_binary(gen_rows: np.ndarray, n: int) -> np.ndarray:
    """All XOR combinations of the given rows, packed into uint64 words."""
    k2 = gen_rows.shape[0]
    words = (n + 63) // 64
    padded = np.zeros((k2, words * 64), dtype=np.uint8)
    padded[:, :n] = gen_rows
    packed = np.packbits(padded, axis=1, bitorder="little").view(np.uint64)
    table = np.zeros((1, words), dtype=np.uint64)
    for j in range(k2):
        table = np.concatenate([table, table ^ packed[j]])
    return table


def _pack_binary(word: np.ndarray) -> np.ndarray:
    n = word.shape[0]
    words = (n + 63) // 64
    padded = np.zeros(words * 64, dtype=np.uint8)
    padded[:n] = word
    return np.packbits(padded, bitorder="little").view(np.uint64)


def _enumerate_blocked(fld: Field, gen: np.ndarray, start_block: int,
                       stop_block: int, k2: int, hist: np.ndarray) -> None:
    """Histogram aligned blocks [start_block*q^k2, stop_block*q^k2)."""
    q = fld.q
    k, n = gen.shape
    binary = q == 2
    if binary:
        table = _suffix_table_binary(gen[:k2].astype(np.uint8), n)
    else:
        table = np.zeros((1, n), dtype=np.uint16)
        for j in range(k2):
            table = np.concatenate(
                [fld.vadd(table, fld.vscale(s, gen[j])[None, :]) for s in range(q)])
    minlength = n + 1
    for blk in range(start_block, stop_block):
        prefix = _codeword_at(fld, gen[k2:], blk) if k2 < k else \
            np.zeros(n, dtype=np.uint16)
        if binary:
            full = table ^ _pack_binary(prefix)
            wts = np.bitwise_count(full).sum(axis=1, dtype=np.int64)
        else:
            full = fld.vadd(table, prefix[None, :])
            wts = np.count_nonzero(full, axis=1)
        hist += np.bincount(wts, minlength=minlength)


def _block_exponent(q: int, n: int) -> int:
    """Largest k2 with q^k2 <= 65536 and a suffix table under ~48 MB."""
    k2 = 1
    while q ** (k2 + 1) <= 65536 and q ** (k2 + 1) * max(n, 64) <= 48 << 20:
        k2 += 1
    return k2


def _range_histogram(fld: Field, gen: np.ndarray, lo: int, hi: int,
                     k2: int) -> np.ndarray:
    """Histogram of one index range: aligned blocks go through the
    vectorized path, the ragged edges through the scalar Gray walk."""
    n = gen.shape[1]
    hist = np.zeros(n + 1, dtype=np.int64)
    blk = fld.q ** k2
    if hi - lo < blk:
        _enumerate_scalar(fld, gen, lo, hi, hist)
        return hist
    a = ((lo + blk - 1) // blk) * blk
    b = (hi // blk) * blk
    if lo < a:
        _enumerate_scalar(fld, gen, lo, a, hist)
    if a < b:
        _enumerate_blocked(fld, gen, a // blk, b // blk, k2, hist)
    if b < hi:
        _enumerate_scalar(fld, gen, b, hi, hist)
    return hist


def weight_enumerator(code: LinearCode, budget: int = DEFAULT_BUDGET,
                      ranges: Optional[Sequence[tuple[int, int]]] = None,
                      workers: int = 1) -> WeightEnumerator:
    """Exact A_0..A_n by enumerating all q^k codewords.

    ``ranges`` optionally partitions the index space [0, q^k); the summed
    histogram is independent of the partition.  ``workers`` > 1 runs the
    ranges concurrently (the default split is one aligned slab per worker).
    """
    fld = code.field
    q, k, n = fld.q, code.k, code.n
    total = q ** k
    if total > budget:
        raise TooLargeError(total, budget)
    if k == 0:
        return WeightEnumerator(n, (1,) + (0,) * n, q=q, k=k)
    k2 = min(_block_exponent(q, n), k)
    if ranges is None:
        blk = q ** k2
        if workers > 1 and total // blk >= 2 * workers:
            slabs = total // blk
            per = slabs // workers
            cuts = [w * per * blk for w in range(workers)] + [total]
            ranges = list(zip(cuts[:-1], cuts[1:]))
        else:
            ranges = [(0, total)]
    else:
        spans = sorted(ranges)
        ok = (spans[0][0] == 0 and spans[-1][1] == total
              and all(lo < hi <= total for lo, hi in spans)
              and all(spans[i][1] == spans[i + 1][0] for i in range(len(spans) - 1)))
        if not ok:
            raise ValueError("ranges must partition [0, q^k)")
    if workers > 1 and len(ranges) > 1:
        from concurrent.futures import ThreadPoolExecutor
        with ThreadPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(
                lambda span: _range_histogram(fld, code.gen, span[0], span[1], k2),
                ranges))
        hist = np.sum(parts, axis=0)
    else:
        hist = np.zeros(n + 1, dtype=np.int64)
        for lo, hi in ranges:
            hist += _range_histogram(fld, code.gen, lo, hi, k2)
    return WeightEnumerator(n, tuple(int(c) for c in hist), q=q, k=k)


def macwilliams(w: WeightEnumerator, q: Optional[int] = None,
                k: Optional[int] = None) -> WeightEnumerator:
    """Exact integer expansion of w(x+(q-1)y, x-y) / q^k."""
    q = q if q is not None else w.q
    k = k if k is not None else w.k
    if q is None or k is None:
        raise ValueError("macwilliams needs q and k (explicit or from provenance)")
    n = w.n
    # Horner expansion with plain integers; xs = x+(q-1)y, ys = x-y
    xs = (1, q - 1)
    ys = (1, -1)

    def lin_mul(vec, lin):
        out = [0] * (len(vec) + 1)
        for i, v in enumerate(vec):
            if v:
                out[i] += v * lin[0]
                out[i + 1] += v * lin[1]
        return out

    ypow = [1]
    acc = [w.coeffs[0]]
    for j in range(1, n + 1):
        acc = lin_mul(acc, xs)
        ypow = lin_mul(ypow, ys)
        cj = w.coeffs[j]
        if cj:
            for t in range(j + 1):
                acc[t] += cj * ypow[t]
    size = q ** k
    out = []
    for c in acc:
        if c % size != 0:
            raise NonIntegerResultError(
                "transform is not integral: not a linear-code enumerator "
                f"for q={q}, k={k}")
        out.append(c // size)
    if any(c < 0 for c in out):
        raise NonIntegerResultError("transform produced negative counts")
    return WeightEnumerator(n, tuple(out), q=q, k=n - k)


def weight_enumerator_smart(code: LinearCode, budget: int = DEFAULT_BUDGET,
                            cache: Optional["EnumeratorCache"] = None,
                            workers: int = 1) -> WeightEnumerator:
    """Direct enumeration if affordable, else enumerate the dual and
    transform back with MacWilliams."""
    fld = code.field
    q, k, n = fld.q, code.k, code.n
    if cache is not None:
        hit = cache.get(code)
        if hit is not None:
            return hit
    if q ** k <= budget:
        w = weight_enumerator(code, budget, workers=workers)
    elif q ** (n - k) <= budget:
        wd = weight_enumerator_smart(dual(code), budget, cache=cache,
                                     workers=workers)
        w = macwilliams(wd, q, n - k)
    else:
        raise TooLargeError(min(q ** k, q ** (n - k)), budget,
                            f"both the code (q^{k}) and its dual (q^{n - k}) "
                            f"exceed budget {budget}")
    if cache is not None:
        cache.put(code, w)
    return w


def divisibility(w: WeightEnumerator) -> int:
    """gcd of the nonzero-coefficient weights; 0 only for w = x^n."""
    g = 0
    for i in range(1, w.n + 1):
        if w.coeffs[i]:
            g = math.gcd(g, i)
    return g


# -- canonical form, files, cache ----------------------------------------------


def canonical_key(code: LinearCode) -> str:
    """Content hash of (q, row-reduced generator); equal row spaces share it."""
    rref, _ = _rref(code.field, code.gen) if code.k else (code.gen, [])
    rows = sorted(tuple(int(x) for x in row) for row in rref)
    h = hashlib.sha256()
    h.update(f"q={code.field.q} n={code.n}\n".encode())
    for row in rows:
        h.update((" ".join(str(x) for x in row) + "\n").encode())
    return h.hexdigest()


def write_code_file(code: LinearCode, path: str) -> None:
    with open(path, "w") as fh:
        fh.write(f"{code.field.q} {code.k} {code.n}\n")
        for row in code.gen:
            fh.write(" ".join(str(int(x)) for x in row) + "\n")


def read_code_file(path: str) -> LinearCode:
    with open(path) as fh:
        lines = fh.read().splitlines()
    if not lines:
        raise ValueError(f"{path}:1: empty code file")
    head = lines[0].split()
    if len(head) != 3:
        raise ValueError(f"{path}:1: expected 'q k n'")
    try:
        q, k, n = (int(x) for x in head)
    except ValueError:
        raise ValueError(f"{path}:1: expected integers 'q k n'") from None
    fld = field_from_order(q)
    rows = []
    for lineno, line in enumerate(lines[1:k + 1], start=2):
        parts = line.split()
        if len(parts) != n:
            raise ValueError(f"{path}:{lineno}: expected {n} entries, got {len(parts)}")
        try:
            row = [int(x) for x in parts]
        except ValueError:
            raise ValueError(f"{path}:{lineno}: non-integer entry") from None
        if any(x < 0 or x >= q for x in row):
            raise ValueError(f"{path}:{lineno}: entry out of range 0..{q - 1}")
        rows.append(row)
    if len(rows) != k:
        raise ValueError(f"{path}: expected {k} generator rows, found {len(rows)}")
    return code_from_matrix(fld, rows, name=os.path.basename(path))


class EnumeratorCache:
    """One file per code under ``directory``, keyed by canonical_key."""

    def __init__(self, directory: Optional[str]):
        self.directory = directory
        self.memo: dict[str, WeightEnumerator] = {}
        if directory:
            os.makedirs(directory, exist_ok=True)

    def get(self, code: LinearCode) -> Optional[WeightEnumerator]:
        key = canonical_key(code)
        if key in self.memo:
            w = self.memo[key]
        elif self.directory:
            path = os.path.join(self.directory, key + ".enum")
            if not os.path.exists(path):
                return None
            with open(path) as fh:
                lines = fh.read().split()
            n = int(lines[0])
            coeffs = tuple(int(x) for x in lines[1:n + 2])
            w = WeightEnumerator(n, coeffs)
            self.memo[key] = w
        else:
            return None
        # reattach provenance for the requesting code
        return WeightEnumerator(w.n, w.coeffs, q=code.field.q, k=code.k)

    def put(self, code: LinearCode, w: WeightEnumerator) -> None:
        key = canonical_key(code)
        self.memo[key] = w
        if self.directory:
            path = os.path.join(self.directory, key + ".enum")
            tmp = path + ".tmp"
            with open(tmp, "w") as fh:
                fh.write(f"{w.n}\n")
                for c in w.coeffs:
                    fh.write(f"{c}\n")
            os.replace(tmp, path)
