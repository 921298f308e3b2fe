"""Building finite fields and doing exact arithmetic in them."""

from diffspec.ff import field_ctx, find_irreducible

ctx = field_ctx(3, 2)
print(f"GF(9) with modulus {ctx.modulus} (coefficients of 1, x, x^2)")

x = ctx.elem_of_index(3)  # the generator of the polynomial basis
print(f"x = {x}, x*x = {ctx.mul(x, x)}, 1/x = {ctx.inv(x)}")
assert ctx.mul(x, ctx.inv(x)) == ctx.one()

# every element has a canonical integer index; the map is a bijection
for i, e in enumerate(ctx.elements()):
    assert ctx.index_of(e) == i

# the modulus search is deterministic; skip=1 gives the next candidate
m1 = find_irreducible(7, 3)
m2 = find_irreducible(7, 3, skip=1)
print(f"first two monic irreducibles of degree 3 over GF(7): {m1}, {m2}")
assert m1 != m2
print("ok")
