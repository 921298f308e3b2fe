"""The binomial family: construction, closed forms, and counting oracles."""

import pytest

from diffspec.errors import CapExceededError, VerificationError
from diffspec.family import (
    ALL_SIGN_PATTERNS,
    build_fu,
    closed_n4,
    closed_signed_count,
    closed_spectrum,
    closed_uniformity,
    closed_zero_count,
    count_quads_all_nonsquare,
    count_signed_quadruples,
    count_triples_all_nonsquare,
    count_triples_all_square,
    count_zero_containing,
    fminus1_check,
)
from diffspec.charsum import chi_table
from diffspec.ff import field_ctx
from diffspec.sbox import ddt_compute, n4_brute, n4_from_ddt, spectrum_from_ddt, uniformity

Q3_FIELDS = [(3, 1), (7, 1), (11, 1), (19, 1), (23, 1), (3, 3)]


def test_build_fu_examples():
    ctx = field_ctx(7)
    f1 = build_fu(ctx, 1)
    assert f1(ctx.zero()) == ctx.zero()
    assert f1(ctx.from_int(3)) == ctx.zero()   # chi(3) = -1
    chi = chi_table(ctx)
    for i, x in enumerate(ctx.elements()):
        want = ctx.mul(ctx.from_int(1 + int(chi[i])), ctx.mul(x, x))
        assert f1(x) == want


def test_build_fu_general_u():
    ctx = field_ctx(7)
    f3 = build_fu(ctx, 3)
    e = (7 + 3) // 2
    for x in ctx.elements():
        assert f3(x) == ctx.add(ctx.pow(x, e), ctx.mul(ctx.from_int(3), ctx.mul(x, x)))
    with pytest.raises(ValueError):
        build_fu(ctx, (1, 2))  # wrong element length


@pytest.mark.parametrize("p,n", [(7, 1), (19, 1), (3, 3)])
def test_fminus1_relation(p, n):
    assert fminus1_check(field_ctx(p, n))


def test_closed_uniformity():
    assert closed_uniformity(3, 1) == 1   # PN
    assert closed_uniformity(7, 1) == 2   # APN
    assert closed_uniformity(7, 3) == 86
    with pytest.raises(ValueError):
        closed_uniformity(5, 1)


def test_closed_n4_examples():
    assert closed_n4(3, 1) == 15
    assert closed_n4(7, 1) == 115
    assert closed_n4(11, 1) == 331


def test_closed_spectrum_examples():
    assert closed_spectrum(3, 5) == {0: 22022, 1: 29524, 2: 7260, 61: 242, 243: 1}
    assert closed_spectrum(19, 1) == {0: 126, 1: 180, 2: 36, 5: 18, 19: 1}
    # bin merging: (q+1)/4 collides with omega_1 at q=3 and omega_2 at q=7
    assert closed_spectrum(3, 1) == {0: 2, 1: 6, 3: 1}
    assert closed_spectrum(7, 1) == {0: 18, 1: 18, 2: 12, 7: 1}
    with pytest.raises(ValueError):
        closed_spectrum(5, 1)


@pytest.mark.parametrize("p,n", Q3_FIELDS + [(31, 1), (43, 1), (47, 1), (59, 1)])
def test_closed_forms_match_brute_force(p, n):
    ctx = field_ctx(p, n)
    ddt = ddt_compute(build_fu(ctx, 1))
    assert uniformity(ddt) == closed_uniformity(p, n)
    assert spectrum_from_ddt(ddt) == closed_spectrum(p, n)
    assert n4_from_ddt(ddt) == closed_n4(p, n)


def test_count_triples_all_square():
    assert count_triples_all_square(field_ctx(3)) == (1, 1)
    assert count_triples_all_square(field_ctx(7)) == (5, 5)
    assert count_triples_all_square(field_ctx(11)) == (9, 9)


def test_count_triples_all_nonsquare():
    assert count_triples_all_nonsquare(field_ctx(7)) == (1, 1)
    assert count_triples_all_nonsquare(field_ctx(11)) == (2, 2)
    assert count_triples_all_nonsquare(field_ctx(3)) == (0, 0)


def test_count_quads_all_nonsquare():
    assert count_quads_all_nonsquare(field_ctx(3)) == (1, 1)
    assert count_quads_all_nonsquare(field_ctx(7)) == (15, 15)
    assert count_quads_all_nonsquare(field_ctx(11)) == (65, 65)
    with pytest.raises(CapExceededError):
        count_quads_all_nonsquare(field_ctx(419), cap=400)


def test_signed_quadruple_examples():
    ctx = field_ctx(7)
    assert count_signed_quadruples(ctx, (1, 1, 1, 1)) == 15  # (q-1)(q-2)/2
    assert count_signed_quadruples(ctx, (1, -1, 1, -1)) == 0
    ctx11 = field_ctx(11)
    assert count_signed_quadruples(ctx11, (-1, -1, -1, -1)) == 65
    with pytest.raises(ValueError):
        count_signed_quadruples(ctx, (1, 1, 1))
    with pytest.raises(ValueError):
        closed_signed_count((1, 0, 1, 1), 7, 1)


def test_zero_containing_examples():
    ctx = field_ctx(7)
    assert count_zero_containing(ctx, 4) == 1 == closed_zero_count(4, 7)
    assert count_zero_containing(ctx, 3) == 0 == closed_zero_count(3, 7)
    assert count_zero_containing(ctx, 2) == 24 == closed_zero_count(2, 7)
    assert count_zero_containing(ctx, 1) == closed_zero_count(1, 7) == 12
    with pytest.raises(ValueError):
        count_zero_containing(ctx, 5)


@pytest.mark.parametrize("p,n", Q3_FIELDS)
def test_quadruple_decomposition(p, n):
    ctx = field_ctx(p, n)
    total = 0
    for pattern in ALL_SIGN_PATTERNS:
        brute = count_signed_quadruples(ctx, pattern)
        assert brute == closed_signed_count(pattern, p, n)
        total += brute
    for z in range(1, 5):
        brute = count_zero_containing(ctx, z)
        assert brute == closed_zero_count(z, ctx.q)
        total += brute
    assert total == n4_brute(build_fu(ctx, 1)) == closed_n4(p, n)


@pytest.mark.parametrize("p,n", Q3_FIELDS)
def test_f1_delta_structure(p, n):
    ctx = field_ctx(p, n)
    q = ctx.q
    ddt = ddt_compute(build_fu(ctx, 1))
    assert all(ddt[a, 0] == (q + 1) // 4 for a in range(1, q))
    assert int(ddt[1:, 1:].max()) <= 2
