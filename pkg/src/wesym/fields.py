"""Exact arithmetic in small finite fields GF(p^v).

Elements are dense integer indices in 0..q-1.  The index is read as the
base-p digit vector of the element's coordinates in the polynomial basis,
so index 0 is the zero element, index 1 is the multiplicative identity,
and in GF(4) = GF(2)[t]/(t^2+t+1) index 2 is t and index 3 is t+1.

The reducing polynomial for an extension field is the monic irreducible
polynomial of degree v whose integer encoding (base-p digits, constant
term least significant) is smallest.  This makes element indices a stable
serialization format across runs and machines.
"""

from __future__ import annotations

import numpy as np

MAX_ORDER = 1 << 16

# Dense q x q tables are only materialized below this order; a 2^16 x 2^16
# table would need gigabytes.  Scalar ops above the limit use digit vectors
# and discrete-log tables, which are exact and O(1) per operation.
DENSE_TABLE_LIMIT = 1024


class NotPrimeError(ValueError):
    """Raised when the requested characteristic is not a prime number."""


class FieldTooLargeError(ValueError):
    """Raised when p^v exceeds the supported field-order cap."""


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


def _digits(x: int, p: int, v: int) -> list[int]:
    out = []
    for _ in range(v):
        out.append(x % p)
        x //= p
    return out


def _undigits(ds, p: int) -> int:
    out = 0
    for d in reversed(ds):
        out = out * p + d
    return out


def _poly_mul_mod(a: int, b: int, p: int, v: int, modulus: list[int]) -> int:
    """Multiply two elements given as indices, reducing by the modulus.

    ``modulus`` holds the v non-leading coefficients of the monic reducing
    polynomial (constant term first).
    """
    da = _digits(a, p, v)
    db = _digits(b, p, v)
    prod = [0] * (2 * v - 1)
    for i, ca in enumerate(da):
        if ca == 0:
            continue
        for j, cb in enumerate(db):
            prod[i + j] = (prod[i + j] + ca * cb) % p
    # reduce: t^v = -modulus
    for deg in range(2 * v - 2, v - 1, -1):
        c = prod[deg]
        if c == 0:
            continue
        prod[deg] = 0
        for j, mc in enumerate(modulus):
            prod[deg - v + j] = (prod[deg - v + j] - c * mc) % p
    return _undigits(prod[:v], p)


def _poly_divides(div: list[int], f: list[int], p: int) -> bool:
    """True if the monic polynomial ``div`` divides ``f`` over GF(p).

    Both arguments are dense coefficient lists, constant term first, with
    monic leading coefficient.
    """
    r = list(f)
    dd = len(div) - 1
    while len(r) - 1 >= dd:
        lead = r[-1]
        if lead:
            for j in range(dd + 1):
                r[len(r) - 1 - dd + j] = (r[len(r) - 1 - dd + j] - lead * div[j]) % p
        r.pop()
    return all(c == 0 for c in r)


def _find_modulus(p: int, v: int) -> list[int]:
    """Smallest-encoding monic irreducible degree-v polynomial over GF(p).

    Returns the v non-leading coefficients, constant term first.
    """
    for enc in range(p ** v):
        low = _digits(enc, p, v)
        cand = low + [1]
        if cand[0] == 0:
            continue  # divisible by t
        # trial division by every monic polynomial of degree 1..v//2
        reducible = False
        for d in range(1, v // 2 + 1):
            for denc in range(p ** d):
                div = _digits(denc, p, d) + [1]
                if _poly_divides(div, cand, p):
                    reducible = True
                    break
            if reducible:
                break
        if not reducible:
            return low
    raise AssertionError(f"no irreducible polynomial of degree {v} over GF({p})")


class Field:
    """GF(p^v) with exact lookup-table arithmetic on element indices.

    Immutable after construction; safe to share between threads.
    """

    def __init__(self, p: int, v: int = 1):
        if not is_prime(p):
            raise NotPrimeError(f"{p} is not prime")
        if v < 1:
            raise ValueError(f"extension degree must be >= 1, got {v}")
        q = p ** v
        if q > MAX_ORDER:
            raise FieldTooLargeError(f"field order {q} exceeds cap {MAX_ORDER}")
        self.p = p
        self.v = v
        self.q = q
        self.modulus = tuple(_find_modulus(p, v)) if v > 1 else None

        self.neg_table = self._build_neg()
        if v > 1:
            self.exp_table, self.log_table = self._build_exp_log()
        else:
            self.exp_table = None
            self.log_table = None

        if q <= DENSE_TABLE_LIMIT:
            self.add_table = self._build_add()
            self.mul_table = self._build_mul()
        else:
            self.add_table = None
            self.mul_table = None
        self.inv_table = np.array([0] + [self._inv_direct(a) for a in range(1, q)],
                                  dtype=np.uint16)

    # -- construction helpers -------------------------------------------------

    def _build_neg(self) -> np.ndarray:
        p, v, q = self.p, self.v, self.q
        if p == 2:
            return np.arange(q, dtype=np.uint16)
        out = np.empty(q, dtype=np.uint16)
        for a in range(q):
            out[a] = _undigits([(-d) % p for d in _digits(a, p, v)], p)
        return out

    def _build_exp_log(self):
        """Powers of a multiplicative generator, plus the inverse map."""
        p, v, q = self.p, self.v, self.q
        modulus = list(self.modulus)
        for g in range(2, q):
            seen = 1
            x = g
            order = 1
            while x != 1:
                x = _poly_mul_mod(x, g, p, v, modulus)
                order += 1
                if order > q:
                    raise AssertionError("generator search ran away")
            if order == q - 1:
                exp = np.empty(q - 1, dtype=np.uint16)
                x = 1
                for e in range(q - 1):
                    exp[e] = x
                    x = _poly_mul_mod(x, g, p, v, modulus)
                log = np.zeros(q, dtype=np.int64)
                for e in range(q - 1):
                    log[exp[e]] = e
                return exp, log
            seen += 1
        raise AssertionError("no multiplicative generator found")

    def _build_add(self) -> np.ndarray:
        p, v, q = self.p, self.v, self.q
        if v == 1:
            a = np.arange(q, dtype=np.int64)
            return ((a[:, None] + a[None, :]) % p).astype(np.uint16)
        if p == 2:
            a = np.arange(q, dtype=np.int64)
            return (a[:, None] ^ a[None, :]).astype(np.uint16)
        a = np.arange(q, dtype=np.int64)
        out = np.zeros((q, q), dtype=np.int64)
        scale = 1
        for _ in range(v):
            da = (a // scale) % p
            out += scale * ((da[:, None] + da[None, :]) % p)
            scale *= p
        return out.astype(np.uint16)

    def _build_mul(self) -> np.ndarray:
        q = self.q
        if self.v == 1:
            a = np.arange(q, dtype=np.int64)
            return ((a[:, None] * a[None, :]) % self.p).astype(np.uint16)
        lg = self.log_table
        out = self.exp_table[(lg[:, None] + lg[None, :]) % (q - 1)].astype(np.uint16)
        out[0, :] = 0
        out[:, 0] = 0
        return out

    def _inv_direct(self, a: int) -> int:
        if self.v == 1:
            return pow(a, self.p - 2, self.p)
        return int(self.exp_table[(self.q - 1 - int(self.log_table[a])) % (self.q - 1)])

    # -- scalar element operations --------------------------------------------

    def add(self, a: int, b: int) -> int:
        if self.add_table is not None:
            return int(self.add_table[a, b])
        if self.v == 1:
            return (a + b) % self.p
        p = self.p
        return _undigits([(x + y) % p for x, y in
                          zip(_digits(a, p, self.v), _digits(b, p, self.v))], p)

    def mul(self, a: int, b: int) -> int:
        if self.mul_table is not None:
            return int(self.mul_table[a, b])
        if self.v == 1:
            return (a * b) % self.p
        if a == 0 or b == 0:
            return 0
        e = (int(self.log_table[a]) + int(self.log_table[b])) % (self.q - 1)
        return int(self.exp_table[e])

    def neg(self, a: int) -> int:
        return int(self.neg_table[a])

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("0 has no multiplicative inverse")
        return int(self.inv_table[a])

    def pow(self, a: int, e: int) -> int:
        if e == 0:
            return 1
        if a == 0:
            return 0
        out = 1
        base = a
        while e:
            if e & 1:
                out = self.mul(out, base)
            base = self.mul(base, base)
            e >>= 1
        return out

    # -- vectorized operations on index arrays --------------------------------

    def vadd(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        """Elementwise field addition of two index arrays (broadcasting)."""
        if self.v == 1:
            return ((x.astype(np.int64) + y.astype(np.int64)) % self.p).astype(x.dtype)
        if self.p == 2:
            return x ^ y
        p = self.p
        out = np.zeros(np.broadcast(x, y).shape, dtype=np.int64)
        scale = 1
        for _ in range(self.v):
            dx = (x.astype(np.int64) // scale) % p
            dy = (y.astype(np.int64) // scale) % p
            out += scale * ((dx + dy) % p)
            scale *= p
        return out.astype(x.dtype)

    def vscale(self, c: int, x: np.ndarray) -> np.ndarray:
        """Multiply every entry of an index array by the scalar c."""
        if c == 0:
            return np.zeros_like(x)
        if c == 1:
            return x.copy()
        if self.v == 1:
            return ((x.astype(np.int64) * c) % self.p).astype(x.dtype)
        row = np.empty(self.q, dtype=x.dtype)
        for t in range(self.q):
            row[t] = self.mul(c, t)
        return row[x]

    def vneg(self, x: np.ndarray) -> np.ndarray:
        return self.neg_table[x].astype(x.dtype)

    # --------------------------------------------------------------------------

    def elements(self) -> range:
        return range(self.q)

    def __eq__(self, other) -> bool:
        return isinstance(other, Field) and (self.p, self.v) == (other.p, other.v)

    def __hash__(self):
        return hash((self.p, self.v))

    def __repr__(self) -> str:
        if self.v == 1:
            return f"Field(GF({self.p}))"
        return f"Field(GF({self.p}^{self.v}))"


_FIELD_CACHE: dict[tuple[int, int], Field] = {}


def field(p: int, v: int = 1) -> Field:
    """Shared-instance constructor; Field objects are immutable."""
    key = (p, v)
    if key not in _FIELD_CACHE:
        _FIELD_CACHE[key] = Field(p, v)
    return _FIELD_CACHE[key]


def field_from_order(q: int) -> Field:
    """Resolve a prime power q to GF(q); rejects non-prime-powers."""
    if q < 2:
        raise ValueError(f"field order must be >= 2, got {q}")
    p = None
    for f in range(2, q + 1):
        if q % f == 0:
            p = f
            break
    v = 0
    x = q
    while x % p == 0:
        x //= p
        v += 1
    if x != 1:
        raise ValueError(f"{q} is not a prime power")
    return field(p, v)
