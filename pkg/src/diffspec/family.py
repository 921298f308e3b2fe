"""The binomial x^((q+3)/2) + u*x^2 and its closed-form differential analytics.

For q = 3 (mod 4) and u = +1 or -1 the function collapses to
(u + chi(x)) * x^2, which drives both a fast table construction and the
closed formulas for the uniformity, the fourth moment N4, and the full
differential spectrum.  Every closed form here is paired with a brute-force
counting oracle so the two can be cross-checked at desk scale.
"""

from __future__ import annotations

from functools import lru_cache
from typing import NamedTuple

import numpy as np

from . import caps
from .charsum import chi_table, lambda_extend
from .errors import ExactnessError, VerificationError
from .ff import FieldCtx, field_ctx, index_ops, square_table
from .sbox import FunctionTable, ddt_compute, spectrum_from_ddt

SignPattern = tuple[int, ...]

ALL_SIGN_PATTERNS: list[SignPattern] = [
    tuple(1 if (m >> (3 - i)) & 1 == 0 else -1 for i in range(4)) for m in range(16)
]


def _require_q3(p: int, n: int) -> int:
    q = p**n
    if q % 4 != 3:
        raise ValueError(f"q = {p}^{n} = {q} is not 3 (mod 4)")
    return q


def chi2_of_prime(p: int) -> int:
    # chi(2) in GF(p^n) for odd n equals the Legendre symbol of 2 mod p
    return 1 if pow(2, (p - 1) // 2, p) == 1 else -1


def _exact_div(num: int, denom: int, what: str) -> int:
    if num % denom != 0:
        raise ExactnessError(f"{what}: {num} not divisible by {denom}")
    return num // denom


# ---------------------------------------------------------------------------
# construction
# ---------------------------------------------------------------------------

def build_fu(ctx: FieldCtx, u=1, verify: bool = True) -> FunctionTable:
    """Lookup table of x^((q+3)/2) + u*x^2 over the given field.

    For u = +1 or -1 the table is built from the character form
    (u + chi(x)) * x^2; with verify=True that form is checked against the
    generic square-and-multiply evaluation on every element.
    """
    u = ctx.coerce(u)
    e = (ctx.q + 3) // 2
    one, minus_one = ctx.one(), ctx.neg(ctx.one())

    def power_eval(x):
        return ctx.add(ctx.pow(x, e), ctx.mul(u, ctx.mul(x, x)))

    if u not in (one, minus_one):
        return FunctionTable(ctx, tuple(ctx.index_of(power_eval(x)) for x in ctx.elements()))

    u_scalar = 1 if u == one else -1
    chi = chi_table(ctx)
    sq = square_table(ctx)
    table = []
    for i in range(ctx.q):
        s = ctx.from_int(u_scalar + int(chi[i]))
        table.append(ctx.index_of(ctx.mul(s, ctx.elem_of_index(int(sq[i])))))
    if verify:
        for i, x in enumerate(ctx.elements()):
            if table[i] != ctx.index_of(power_eval(x)):
                raise VerificationError(
                    f"character form disagrees with power evaluation at index {i}"
                )
    return FunctionTable(ctx, tuple(table))


def fminus1_check(ctx: FieldCtx) -> bool:
    """Verify f_{-1}(x) = -f_1(-x) pointwise and that both spectra coincide."""
    f1 = build_fu(ctx, 1)
    fm1 = build_fu(ctx, -1)
    for x in ctx.elements():
        if fm1(x) != ctx.neg(f1(ctx.neg(x))):
            return False
    return spectrum_from_ddt(ddt_compute(f1)) == spectrum_from_ddt(ddt_compute(fm1))


# ---------------------------------------------------------------------------
# closed forms
# ---------------------------------------------------------------------------

def closed_uniformity(p: int, n: int) -> int:
    """Differential uniformity of the u=1 binomial: (q + 1) / 4."""
    q = _require_q3(p, n)
    return (q + 1) // 4


def closed_n4(p: int, n: int) -> int:
    """Fourth moment N4 = (q-1)(q^2 + 34q + 17 + 4(chi(2)-1)lambda)/16 + 1."""
    q = _require_q3(p, n)
    lam = lambda_extend(p, n).value
    c2 = chi2_of_prime(p)
    num = (q - 1) * (q * q + 34 * q + 17 + 4 * (c2 - 1) * lam)
    return _exact_div(num, 16, "N4 closed form") + 1


def closed_spectrum(p: int, n: int) -> dict[int, int]:
    """Closed-form differential spectrum of the u=1 binomial, as {i: omega_i}.

    omega_0 = (q-1)(3q + 3 + (chi(2)-1)lambda)/8,
    omega_1 = (q-1)(2q - 2 - (chi(2)-1)lambda)/4,
    omega_2 = (q-1)(q + 1 + (chi(2)-1)lambda)/8,
    omega_{(q+1)/4} = q - 1, omega_q = 1.

    When (q+1)/4 collides with bin 1 (q=3) or bin 2 (q=7) the q-1 mass is
    merged into that bin, so the result is a well-defined multiset.  The
    chi(2) = +1 / -1 specializations are computed as an independent path and
    must agree.
    """
    q = _require_q3(p, n)
    lam = lambda_extend(p, n).value
    c2 = chi2_of_prime(p)
    t = (c2 - 1) * lam
    w0 = _exact_div((q - 1) * (3 * q + 3 + t), 8, "omega_0")
    w1 = _exact_div((q - 1) * (2 * q - 2 - t), 4, "omega_1")
    w2 = _exact_div((q - 1) * (q + 1 + t), 8, "omega_2")
    if (w0, w1, w2) != _spectrum_specialized(q, lam, c2):
        raise VerificationError("chi(2)-specialized spectrum path disagrees")
    spec = {0: w0, 1: w1, 2: w2}
    big = (q + 1) // 4
    spec[big] = spec.get(big, 0) + (q - 1)
    spec[q] = spec.get(q, 0) + 1
    return {i: w for i, w in sorted(spec.items()) if w}


def _spectrum_specialized(q: int, lam: int, c2: int) -> tuple[int, int, int]:
    # alternate route: the spectrum with chi(2) substituted as +1 or -1
    if c2 == 1:
        w0 = _exact_div(3 * (q * q - 1), 8, "omega_0 (chi2=+1)")
        w1 = _exact_div((q - 1) ** 2, 2, "omega_1 (chi2=+1)")
        w2 = _exact_div(q * q - 1, 8, "omega_2 (chi2=+1)")
    else:
        w0 = _exact_div((q - 1) * (3 * q + 3 - 2 * lam), 8, "omega_0 (chi2=-1)")
        w1 = _exact_div((q - 1) * (q - 1 + lam), 2, "omega_1 (chi2=-1)")
        w2 = _exact_div((q - 1) * (q + 1 - 2 * lam), 8, "omega_2 (chi2=-1)")
    return w0, w1, w2


# ---------------------------------------------------------------------------
# brute-force counting oracles and their closed partners
# ---------------------------------------------------------------------------

class CountPair(NamedTuple):
    brute: int
    closed: int


def count_triples_all_square(ctx: FieldCtx) -> CountPair:
    """Triples of nonzero squares with y1 - y2 + y3 = 1 and y1^2 - y2^2 + y3^2 = 1.

    Brute-force count paired with the closed form q - 2; equality asserted.
    """
    q = _require_q3(ctx.p, ctx.n)
    brute = _count_triples(ctx, sign=1, rhs_is_one=True)
    return _paired(brute, q - 2, "all-square triple count")


def count_triples_all_nonsquare(ctx: FieldCtx) -> CountPair:
    """Triples of nonsquares with y1 - y2 + y3 = 1 and y1^2 - y2^2 + y3^2 = 0.

    Closed form (q + 1 + (chi(2)-1)lambda)/8; equality asserted.
    """
    q = _require_q3(ctx.p, ctx.n)
    lam = lambda_extend(ctx.p, ctx.n).value
    closed = _exact_div(q + 1 + (chi2_of_prime(ctx.p) - 1) * lam, 8, "nonsquare triple count")
    brute = _count_triples(ctx, sign=-1, rhs_is_one=False)
    return _paired(brute, closed, "all-nonsquare triple count")


def count_quads_all_nonsquare(ctx: FieldCtx, cap: int | None = None) -> CountPair:
    """Nonsquare quadruples with y1 - y2 + y3 - y4 = 0.

    Closed form (q - 1)(q^2 - 2q + 5)/16; equality asserted.
    """
    q = _require_q3(ctx.p, ctx.n)
    caps.check_cap(q, caps.q3_cap() if cap is None else cap, "quadruple counter")
    chi = chi_table(ctx)
    ops = index_ops(ctx)
    ns = np.flatnonzero(chi == -1)
    y2g, y3g = np.meshgrid(ns, ns, indexing="ij")
    brute = 0
    for y1 in ns:
        y4 = ops.add(ops.sub(int(y1), y2g), y3g)
        brute += int(np.count_nonzero(chi[y4] == -1))
    closed = _exact_div((q - 1) * (q * q - 2 * q + 5), 16, "nonsquare quadruple count")
    return _paired(brute, closed, "all-nonsquare quadruple count")


def count_signed_quadruples(ctx: FieldCtx, pattern: SignPattern, cap: int | None = None) -> int:
    """Solutions over nonzero quadruples of x1 - x2 + x3 - x4 = 0 together with
    (1+chi(x1))x1^2 - (1+chi(x2))x2^2 + (1+chi(x3))x3^2 - (1+chi(x4))x4^2 = 0,
    restricted to the given quadratic-character sign pattern."""
    pattern = _check_pattern(pattern, 4)
    _require_q3(ctx.p, ctx.n)
    caps.check_cap(ctx.q, caps.q3_cap() if cap is None else cap, "signed quadruple counter")
    patterns, _ = _quadruple_census(ctx)
    idx = sum((1 if s == -1 else 0) << (3 - i) for i, s in enumerate(pattern))
    return int(patterns[idx])


def closed_signed_count(pattern: SignPattern, p: int, n: int) -> int:
    """Closed form for count_signed_quadruples, by number of nonsquare slots."""
    pattern = _check_pattern(pattern, 4)
    q = _require_q3(p, n)
    m = sum(1 for s in pattern if s == -1)
    if m == 0:
        return _exact_div((q - 1) * (q - 2), 2, "signed count (0 nonsquares)")
    if m == 1:
        lam = lambda_extend(p, n).value
        num = (q - 1) * (q + 1 + (chi2_of_prime(p) - 1) * lam)
        return _exact_div(num, 16, "signed count (1 nonsquare)")
    if m == 2:
        alternating = pattern[0] == pattern[2] and pattern[1] == pattern[3]
        if alternating:
            return 0
        return _exact_div((q - 1) ** 2, 4, "signed count (2 nonsquares)")
    if m == 3:
        return 0
    return _exact_div((q - 1) * (q * q - 2 * q + 5), 16, "signed count (4 nonsquares)")


def count_zero_containing(ctx: FieldCtx, num_zeros: int, cap: int | None = None) -> int:
    """Solutions of the same quadruple system with exactly num_zeros coordinates zero."""
    if not 1 <= num_zeros <= 4:
        raise ValueError("num_zeros must be in 1..4")
    _require_q3(ctx.p, ctx.n)
    caps.check_cap(ctx.q, caps.q3_cap() if cap is None else cap, "zero-containing counter")
    _, zeros = _quadruple_census(ctx)
    return int(zeros[num_zeros])


def closed_zero_count(num_zeros: int, q: int) -> int:
    """Closed forms: 4 -> 1, 3 -> 0, 2 -> 4(q-1), 1 -> (q-3)(q-1)/2."""
    if num_zeros == 4:
        return 1
    if num_zeros == 3:
        return 0
    if num_zeros == 2:
        return 4 * (q - 1)
    if num_zeros == 1:
        return _exact_div((q - 3) * (q - 1), 2, "zero-containing count")
    raise ValueError("num_zeros must be in 1..4")


# ---------------------------------------------------------------------------
# internals
# ---------------------------------------------------------------------------

def _paired(brute: int, closed: int, what: str) -> CountPair:
    if brute != closed:
        raise VerificationError(f"{what}: brute {brute} != closed {closed}")
    return CountPair(brute, closed)


def _check_pattern(pattern, length: int) -> SignPattern:
    pattern = tuple(pattern)
    if len(pattern) != length or any(s not in (1, -1) for s in pattern):
        raise ValueError(f"pattern must be {length} entries of +1/-1")
    return pattern


def _count_triples(ctx: FieldCtx, sign: int, rhs_is_one: bool) -> int:
    """Enumerate (y1, y2) and solve y3 = 1 - y1 + y2; O(q^2)."""
    caps.check_cap(ctx.q, caps.q2_cap(), "triple counter")
    chi = chi_table(ctx)
    ops = index_ops(ctx)
    sq = square_table(ctx)
    sel = np.flatnonzero(chi == sign)
    y1g, y2g = np.meshgrid(sel, sel, indexing="ij")
    y3 = ops.add(ops.sub(1, y1g), y2g)  # index 1 is the element 1
    ok = chi[y3] == sign
    lhs = ops.add(sq[y1g], sq[y3])
    rhs = ops.add(sq[y2g], 1) if rhs_is_one else sq[y2g]
    return int(np.count_nonzero(ok & (lhs == rhs)))


@lru_cache(maxsize=None)
def _quadruple_census(ctx: FieldCtx) -> tuple[np.ndarray, np.ndarray]:
    """One vectorized pass over (x1, x2, x3) with x4 determined.

    Returns (pattern_counts[16], zero_counts[5]): solutions of the quadruple
    system bucketed by character sign pattern (all coordinates nonzero) and
    by the exact number of zero coordinates.
    """
    q = ctx.q
    chi = chi_table(ctx)
    ops = index_ops(ctx)
    f = np.asarray(build_fu(ctx, 1, verify=False).table, dtype=np.int64)
    xs = np.arange(q)
    x2g, x3g = np.meshgrid(xs, xs, indexing="ij")
    f2, f3 = f[x2g], f[x3g]
    neg2 = (chi[x2g] == -1).astype(np.int64)
    neg3 = (chi[x3g] == -1).astype(np.int64)
    zero23 = (x2g == 0).astype(np.int64) + (x3g == 0).astype(np.int64)
    patterns = np.zeros(16, dtype=np.int64)
    zeros = np.zeros(5, dtype=np.int64)
    for x1 in range(q):
        x4 = ops.add(ops.sub(x1, x2g), x3g)
        sol = ops.add(f[x1], f3) == ops.add(f2, f[x4])
        nzeros = zero23 + (x4 == 0) + (1 if x1 == 0 else 0)
        all_nonzero = nzeros == 0
        pat = ((1 if chi[x1] == -1 else 0) << 3) | (neg2 << 2) | (neg3 << 1) | (chi[x4] == -1)
        patterns += np.bincount(pat[sol & all_nonzero], minlength=16)
        zeros += np.bincount(nzeros[sol & ~all_nonzero], minlength=5)[:5]
    return patterns, zeros
