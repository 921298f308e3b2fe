"""Quadratic character, exact character sums, and the lambda trace quantity.

lambda(p, n) denotes the exact integer sum of chi(x * (x^2 - 2x - 1)) over
GF(p^n), where chi is the quadratic character.  It can be computed two ways:
by direct enumeration of the field, or from lambda(p, 1) through the exact
trace recursion for the point counts of y^2 = x^3 - 2x^2 - x over extension
fields.  Both routes are exposed so each can serve as an oracle for the other.
"""

from __future__ import annotations

from functools import lru_cache
from math import comb
from typing import NamedTuple, Sequence

import numpy as np

from .errors import ExactnessError
from .ff import FieldCtx, FieldElem, field_ctx, is_prime


class LambdaEntry(NamedTuple):
    p: int
    n: int
    value: int


@lru_cache(maxsize=None)
def chi_table(ctx: FieldCtx) -> np.ndarray:
    """chi of every field element, indexed canonically (int8: -1, 0, +1).

    Built by marking the squares of all nonzero elements (q multiplications),
    which avoids one exponentiation per element.
    """
    t = np.full(ctx.q, -1, dtype=np.int8)
    t[0] = 0
    for i in range(1, ctx.q):
        x = ctx.elem_of_index(i)
        t[ctx.index_of(ctx.mul(x, x))] = 1
    return t


def quadratic_character(ctx: FieldCtx, a: FieldElem) -> int:
    """chi(a): 0 if a=0, +1 if a is a nonzero square, -1 otherwise."""
    if a == ctx.zero():
        return 0
    return 1 if ctx.pow(a, (ctx.q - 1) // 2) == ctx.one() else -1


def char_sum_poly(ctx: FieldCtx, coeffs: Sequence) -> int:
    """Exact sum of chi(f(x)) over all x in the field, by direct enumeration.

    coeffs is the little-endian coefficient list of f; entries may be field
    elements or integers (embedded as constants).
    """
    if len(coeffs) == 0:
        raise ValueError("empty coefficient list")
    cs = [ctx.coerce(c) for c in coeffs]
    chi = chi_table(ctx)
    total = 0
    if ctx.n == 1:
        p = ctx.p
        ints = [c[0] for c in reversed(cs)]
        for x in range(p):
            v = 0
            for c in ints:
                v = (v * x + c) % p
            total += int(chi[v])
        return total
    for x in ctx.elements():
        v = ctx.zero()
        for c in reversed(cs):
            v = ctx.add(ctx.mul(v, x), c)
        total += int(chi[ctx.index_of(v)])
    return total


def quad_sum_closed(ctx: FieldCtx, a2, a1, a0) -> int:
    """Closed form for the sum of chi(a2 x^2 + a1 x + a0) over the field.

    Equals -chi(a2) when the discriminant a1^2 - 4 a0 a2 is nonzero, and
    (q - 1) chi(a2) when it vanishes.
    """
    a2, a1, a0 = ctx.coerce(a2), ctx.coerce(a1), ctx.coerce(a0)
    if a2 == ctx.zero():
        raise ValueError("a2 = 0: not a quadratic")
    four = ctx.from_int(4)
    d = ctx.sub(ctx.mul(a1, a1), ctx.mul(four, ctx.mul(a0, a2)))
    chi_a2 = quadratic_character(ctx, a2)
    if d == ctx.zero():
        return (ctx.q - 1) * chi_a2
    return -chi_a2


# ---------------------------------------------------------------------------
# lambda: direct enumeration and exact trace recursion
# ---------------------------------------------------------------------------

_CUBIC = (0, -1, -2, 1)  # x * (x^2 - 2x - 1) = x^3 - 2x^2 - x


def lambda_direct(p: int, n: int = 1, modulus: Sequence[int] | None = None) -> LambdaEntry:
    """lambda(p, n) by direct summation over GF(p^n)."""
    if p == 2:
        raise ValueError("p must be odd")
    ctx = field_ctx(p, n, modulus)
    return LambdaEntry(p, n, char_sum_poly(ctx, _CUBIC))


def lambda_extend(p: int, n: int = 1) -> LambdaEntry:
    """lambda(p, n) from lambda(p, 1) via the exact trace recursion.

    With g = lambda(p, 1), the degree-n value is
        (-1)^(n+1) / 2^(n-1) * sum_k (-1)^k C(n, 2k) g^(n-2k) (4p - g^2)^k,
    all in exact integer arithmetic; the division by 2^(n-1) must be exact.
    When g = 0 the value is 0 for odd n and (-1)^(n/2+1) * 2 * p^(n/2) for
    even n.
    """
    if not is_prime(p) or p == 2:
        raise ValueError(f"p={p} must be an odd prime")
    if n < 1:
        raise ValueError(f"n={n} must be positive")
    g = lambda_direct(p, 1).value
    if g == 0:
        if n % 2 == 1:
            return LambdaEntry(p, n, 0)
        return LambdaEntry(p, n, (-1) ** (n // 2 + 1) * 2 * p ** (n // 2))
    disc = 4 * p - g * g
    num = sum(
        (-1) ** k * comb(n, 2 * k) * g ** (n - 2 * k) * disc**k
        for k in range(n // 2 + 1)
    )
    num *= (-1) ** (n + 1)
    denom = 2 ** (n - 1)
    if num % denom != 0:
        raise ExactnessError(f"trace recursion not divisible by 2^{n - 1} at (p={p}, n={n})")
    return LambdaEntry(p, n, num // denom)


def lambda_table(max_p: int) -> list[LambdaEntry]:
    """lambda(p, 1) for every prime p <= max_p with p = 3 (mod 4), ascending."""
    out = []
    for p in range(3, max_p + 1, 4):
        if is_prime(p):
            out.append(lambda_direct(p, 1))
    return out


def point_count_cubic(ctx: FieldCtx) -> int:
    """Number of affine points (x, y) with y^2 = x^3 - 2x^2 - x, plus one.

    Counted by tallying square roots per field element, independently of the
    character sum; serves as a cross-check of q + 1 + lambda.
    """
    q = ctx.q
    roots = np.zeros(q, dtype=np.int64)
    for i in range(q):
        y = ctx.elem_of_index(i)
        roots[ctx.index_of(ctx.mul(y, y))] += 1
    total = 0
    for x in ctx.elements():
        x2 = ctx.mul(x, x)
        x3 = ctx.mul(x2, x)
        rhs = ctx.sub(ctx.sub(x3, ctx.add(x2, x2)), x)
        total += int(roots[ctx.index_of(rhs)])
    return total + 1
