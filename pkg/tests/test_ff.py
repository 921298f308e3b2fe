"""Field construction, arithmetic, and the canonical enumeration."""

import random

import pytest

from diffspec.ff import FieldCtx, field_ctx, find_irreducible, is_irreducible

SMALL_FIELDS = [(3, 1), (7, 1), (3, 2), (7, 2), (3, 3), (5, 2), (19, 1)]


def test_find_irreducible_degree_one():
    assert find_irreducible(3, 1) == (0, 1)


def test_find_irreducible_gf9():
    # x^2 is reducible, x^2+2 = (x+1)(x+2) over Z_3, so x^2+1 is the smallest
    assert find_irreducible(3, 2) == (1, 0, 1)


def test_find_irreducible_gf343_by_exhaustive_factor_scan():
    mod = find_irreducible(7, 3)
    assert mod[-1] == 1 and len(mod) == 4
    # oracle: no root in Z_7 and no smaller monic irreducible below it
    def has_root(poly):
        return any(sum(c * pow(x, i, 7) for i, c in enumerate(poly)) % 7 == 0
                   for x in range(7))
    assert not has_root(mod)
    enc = sum(c * 7**i for i, c in enumerate(mod[:-1]))
    for smaller in range(enc):
        cand = [smaller % 7, (smaller // 7) % 7, (smaller // 49) % 7, 1]
        assert has_root(cand) or not is_irreducible(7, cand)


def test_find_irreducible_rejects_bad_input():
    with pytest.raises(ValueError):
        find_irreducible(4, 2)
    with pytest.raises(ValueError):
        find_irreducible(2, 3)
    with pytest.raises(ValueError):
        find_irreducible(7, 0)


def test_is_irreducible_examples():
    assert is_irreducible(3, (1, 0, 1))          # x^2 + 1
    assert not is_irreducible(3, (2, 0, 1))      # x^2 + 2 = (x+1)(x+2)
    assert is_irreducible(7, (0, 1))             # x
    with pytest.raises(ValueError):
        is_irreducible(3, (1, 2))                # non-monic


def test_ctx_rejects_reducible_modulus():
    with pytest.raises(ValueError):
        FieldCtx(3, 2, (2, 0, 1))


def test_gf9_arithmetic():
    ctx = field_ctx(3, 2)  # Z_3[x]/(x^2+1)
    x = (0, 1)
    assert ctx.mul(x, x) == ctx.from_int(2)   # x^2 = -1
    assert ctx.inv(x) == (0, 2)               # x * 2x = 2x^2 = -2 = 1
    assert ctx.mul(x, ctx.inv(x)) == ctx.one()


def test_zp_inverse():
    ctx = field_ctx(7)
    assert ctx.inv(ctx.from_int(2)) == ctx.from_int(4)
    with pytest.raises(ZeroDivisionError):
        ctx.inv(ctx.zero())


def test_pow_examples():
    ctx = field_ctx(19)
    assert ctx.pow(ctx.from_int(2), 9) == ctx.from_int(18)  # 2 is a nonsquare
    assert ctx.pow(ctx.zero(), 0) == ctx.one()


@pytest.mark.parametrize("p,n", SMALL_FIELDS)
def test_pow_lagrange(p, n):
    ctx = field_ctx(p, n)
    for a in ctx.elements():
        if a != ctx.zero():
            assert ctx.pow(a, ctx.q - 1) == ctx.one()
            assert ctx.pow(a, (ctx.q - 1) // 2) in (ctx.one(), ctx.neg(ctx.one()))
        assert ctx.pow(a, ctx.q) == a  # Frobenius^n is the identity


def test_index_bijection():
    ctx = field_ctx(3, 2)
    assert ctx.index_of(ctx.zero()) == 0
    assert ctx.index_of((2, 1)) == 2 + 1 * 3  # x + 2
    for i in range(ctx.q):
        assert ctx.index_of(ctx.elem_of_index(i)) == i
    with pytest.raises(ValueError):
        ctx.elem_of_index(9)


def test_enumerate_field():
    assert [e[0] for e in field_ctx(3).elements()] == [0, 1, 2]
    elems = list(field_ctx(3, 2).elements())
    assert len(elems) == 9 and elems[0] == (0, 0) and elems[-1] == (2, 2)
    assert sum(1 for _ in field_ctx(7, 3).elements()) == 343


@pytest.mark.parametrize("p,n", SMALL_FIELDS)
def test_field_axioms(p, n):
    ctx = field_ctx(p, n)
    q = ctx.q
    if q <= 49:
        triples = [(a, b, c) for a in ctx.elements() for b in ctx.elements()
                   for c in ctx.elements()]
        if len(triples) > 5000:
            triples = random.Random(0).sample(triples, 5000)
    else:
        rng = random.Random(1)
        triples = [tuple(ctx.elem_of_index(rng.randrange(q)) for _ in range(3))
                   for _ in range(1000)]
    for a, b, c in triples:
        assert ctx.add(a, b) == ctx.add(b, a)
        assert ctx.mul(a, b) == ctx.mul(b, a)
        assert ctx.mul(ctx.mul(a, b), c) == ctx.mul(a, ctx.mul(b, c))
        assert ctx.mul(a, ctx.add(b, c)) == ctx.add(ctx.mul(a, b), ctx.mul(a, c))
        assert ctx.add(a, ctx.neg(a)) == ctx.zero()
        assert ctx.mul(ctx.one(), b) == b


@pytest.mark.parametrize("p,n", [(3, 1), (7, 1), (3, 3), (7, 3)])
def test_multiplicative_generator_exists(p, n):
    ctx = field_ctx(p, n)
    q = ctx.q

    def order(a):
        acc, k = a, 1
        while acc != ctx.one():
            acc = ctx.mul(acc, a)
            k += 1
        return k

    assert any(order(ctx.elem_of_index(i)) == q - 1 for i in range(1, q))


def test_mismatched_lengths_rejected():
    ctx = field_ctx(3, 2)
    with pytest.raises(ValueError):
        ctx.add((1,), (1, 2))
    with pytest.raises(ValueError):
        ctx.coerce((1, 2, 0))
