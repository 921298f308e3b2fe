"""Exact arithmetic in GF(p) and GF(p^n), with a canonical element enumeration.

Elements of GF(p^n) are represented in the polynomial basis as tuples of
length n over Z_p (little-endian: coeffs[i] multiplies x^i), always fully
reduced so that equality is structural.  The canonical index of an element
is its base-p integer encoding sum(coeffs[i] * p^i); index 0 is the zero
element and index c (c < p) is the constant c, so the prime subfield
occupies indices 0..p-1.

A field modulus is a monic irreducible polynomial given as a coefficient
list (c_0, ..., c_n) with c_n = 1.  When none is supplied the canonical
choice is the monic irreducible of degree n with the smallest base-p
encoding of (c_0, ..., c_{n-1}), which makes every construction
deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence

import numpy as np

FieldElem = tuple[int, ...]


def is_prime(m: int) -> bool:
    """Deterministic primality test (trial division; desk-scale inputs)."""
    if m < 2:
        return False
    if m < 4:
        return True
    if m % 2 == 0:
        return False
    d = 3
    while d * d <= m:
        if m % d == 0:
            return False
        d += 2
    return True


# ---------------------------------------------------------------------------
# polynomials over Z_p (little-endian coefficient lists, trimmed)
# ---------------------------------------------------------------------------

def _poly_trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_mul(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _poly_trim(out)


def _poly_mod(a: Sequence[int], m: Sequence[int], p: int) -> list[int]:
    """Remainder of a modulo a monic polynomial m."""
    r = _poly_trim([c % p for c in a])
    dm = len(m) - 1
    while r and len(r) - 1 >= dm:
        lead = r[-1]
        shift = len(r) - 1 - dm
        for i, mi in enumerate(m):
            r[shift + i] = (r[shift + i] - lead * mi) % p
        r = _poly_trim(r)
    return r


def is_irreducible(p: int, poly: Sequence[int]) -> bool:
    """Whether a monic polynomial over Z_p has no nontrivial factorization.

    Trial division by every monic polynomial of degree up to deg/2;
    deterministic and adequate at desk scale (deg <= ~7).
    """
    if not is_prime(p):
        raise ValueError(f"p={p} is not prime")
    poly = [c % p for c in poly]
    if not poly or poly[-1] != 1:
        raise ValueError("polynomial must be monic")
    deg = len(poly) - 1
    if deg < 1:
        raise ValueError("degree must be at least 1")
    if deg == 1:
        return True
    for d in range(1, deg // 2 + 1):
        for enc in range(p**d):
            div = _digits(enc, p, d) + [1]
            if not _poly_mod(poly, div, p):
                return False
    return True


def find_irreducible(p: int, n: int, skip: int = 0) -> tuple[int, ...]:
    """Deterministic monic irreducible of degree n over Z_p.

    Candidates are scanned in ascending base-p encoding of the lower
    coefficients, so skip=0 gives the canonical (smallest) modulus and
    skip=k the (k+1)-th one.
    """
    if not is_prime(p) or p == 2:
        raise ValueError(f"p={p} must be an odd prime")
    if n < 1:
        raise ValueError(f"n={n} must be positive")
    remaining = skip
    for enc in range(p**n):
        cand = _digits(enc, p, n) + [1]
        if is_irreducible(p, cand):
            if remaining == 0:
                return tuple(cand)
            remaining -= 1
    raise ValueError(f"fewer than {skip + 1} irreducibles of degree {n} over Z_{p}")


def _digits(k: int, p: int, length: int) -> list[int]:
    out = []
    for _ in range(length):
        k, r = divmod(k, p)
        out.append(r)
    return out


# ---------------------------------------------------------------------------
# field context
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class FieldCtx:
    """A concrete realization of GF(p^n): odd prime p, degree n, monic modulus."""

    p: int
    n: int
    modulus: tuple[int, ...]

    def __post_init__(self) -> None:
        if not is_prime(self.p) or self.p == 2:
            raise ValueError(f"p={self.p} must be an odd prime")
        if self.n < 1:
            raise ValueError(f"n={self.n} must be positive")
        mod = tuple(c % self.p for c in self.modulus)
        if len(mod) != self.n + 1 or mod[-1] != 1:
            raise ValueError("modulus must be monic of degree n")
        if self.n > 1 and not is_irreducible(self.p, mod):
            raise ValueError(f"modulus {mod} is reducible over Z_{self.p}")
        object.__setattr__(self, "modulus", mod)
        # x^(n+j) mod modulus, j = 0..n-2, used to fold products back to length n
        red = []
        cur = [-c % self.p for c in mod[:-1]]  # x^n mod m
        for _ in range(self.n - 1):
            red.append(tuple(cur))
            cur = [0] + cur
            lead = cur.pop()
            if lead:
                cur = [(ci - lead * mi) % self.p for ci, mi in zip(cur, mod[:-1])]
        object.__setattr__(self, "_red", tuple(red))

    @property
    def q(self) -> int:
        return self.p**self.n

    # -- element constructors ------------------------------------------------

    def zero(self) -> FieldElem:
        return (0,) * self.n

    def one(self) -> FieldElem:
        return (1,) + (0,) * (self.n - 1)

    def from_int(self, k: int) -> FieldElem:
        """Embed an integer as a constant (prime-subfield) element."""
        return (k % self.p,) + (0,) * (self.n - 1)

    def coerce(self, a) -> FieldElem:
        if isinstance(a, int):
            return self.from_int(a)
        a = tuple(c % self.p for c in a)
        if len(a) != self.n:
            raise ValueError(f"element length {len(a)} != n={self.n}")
        return a

    # -- arithmetic ----------------------------------------------------------

    def add(self, a: FieldElem, b: FieldElem) -> FieldElem:
        self._check(a, b)
        return tuple((x + y) % self.p for x, y in zip(a, b))

    def sub(self, a: FieldElem, b: FieldElem) -> FieldElem:
        self._check(a, b)
        return tuple((x - y) % self.p for x, y in zip(a, b))

    def neg(self, a: FieldElem) -> FieldElem:
        self._check(a)
        return tuple(-x % self.p for x in a)

    def mul(self, a: FieldElem, b: FieldElem) -> FieldElem:
        self._check(a, b)
        p, n = self.p, self.n
        if n == 1:
            return ((a[0] * b[0]) % p,)
        conv = [0] * (2 * n - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    conv[i + j] += ai * bj
        out = [c % p for c in conv[:n]]
        for j in range(n - 1):
            hi = conv[n + j] % p
            if hi:
                row = self._red[j]
                for i in range(n):
                    out[i] = (out[i] + hi * row[i]) % p
        return tuple(out)

    def pow(self, a: FieldElem, e: int) -> FieldElem:
        """Square-and-multiply exponentiation; 0^0 is defined as 1."""
        if e < 0:
            raise ValueError("exponent must be nonnegative")
        self._check(a)
        result = self.one()
        base = a
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    def inv(self, a: FieldElem) -> FieldElem:
        self._check(a)
        if a == self.zero():
            raise ZeroDivisionError("zero has no multiplicative inverse")
        return self.pow(a, self.q - 2)

    # -- canonical enumeration -------------------------------------------------

    def index_of(self, a: FieldElem) -> int:
        self._check(a)
        idx = 0
        for c in reversed(a):
            idx = idx * self.p + c
        return idx

    def elem_of_index(self, i: int) -> FieldElem:
        if not 0 <= i < self.q:
            raise ValueError(f"index {i} out of range [0, {self.q})")
        return tuple(_digits(i, self.p, self.n))

    def elements(self) -> Iterator[FieldElem]:
        """All q elements in canonical index order."""
        for i in range(self.q):
            yield self.elem_of_index(i)

    def _check(self, *elems: FieldElem) -> None:
        for a in elems:
            if len(a) != self.n:
                raise ValueError(f"element length {len(a)} != n={self.n}")


def field_ctx(p: int, n: int = 1, modulus: Sequence[int] | None = None) -> FieldCtx:
    """Build a field context, choosing the canonical modulus when none is given."""
    if modulus is None:
        modulus = (0, 1) if n == 1 else find_irreducible(p, n)
    return FieldCtx(p, n, tuple(modulus))


# ---------------------------------------------------------------------------
# index-level vectorized operations (numpy), used by the DDT and counting code
# ---------------------------------------------------------------------------

class IndexOps:
    """Field arithmetic lifted to canonical indices, vectorized over numpy arrays.

    For n=1 this is plain modular arithmetic; for n>1 a q x q addition table
    and a negation vector are precomputed from the base-p digit matrix.
    """

    def __init__(self, ctx: FieldCtx):
        self.ctx = ctx
        self.q = ctx.q
        if ctx.n == 1:
            self._table = None
        else:
            digits = np.zeros((ctx.q, ctx.n), dtype=np.int64)
            idx = np.arange(ctx.q)
            for i in range(ctx.n):
                idx, digits[:, i] = np.divmod(idx, ctx.p)
            weights = ctx.p ** np.arange(ctx.n)
            summed = (digits[:, None, :] + digits[None, :, :]) % ctx.p
            self._table = (summed * weights).sum(axis=2).astype(np.int64)
            self._neg = (((-digits) % ctx.p) * weights).sum(axis=1).astype(np.int64)

    def add(self, a, b):
        if self._table is None:
            return (a + b) % self.q
        return self._table[a, b]

    def neg(self, a):
        if self._table is None:
            return (-a) % self.q
        return self._neg[a]

    def sub(self, a, b):
        if self._table is None:
            return (a - b) % self.q
        return self._table[a, self._neg[b]]


@lru_cache(maxsize=None)
def index_ops(ctx: FieldCtx) -> IndexOps:
    return IndexOps(ctx)


@lru_cache(maxsize=None)
def square_table(ctx: FieldCtx) -> np.ndarray:
    """square_table[i] = index of x^2 where x = elem_of_index(i)."""
    out = np.empty(ctx.q, dtype=np.int64)
    for i, x in enumerate(ctx.elements()):
        out[i] = ctx.index_of(ctx.mul(x, x))
    return out
