"""Square/nonsquare counting lemmas and the decomposition of the fourth
power moment N4 into 20 exactly-known pieces."""

from diffspec.family import (
    ALL_SIGN_PATTERNS,
    build_fu,
    closed_n4,
    closed_signed_count,
    closed_zero_count,
    count_signed_quadruples,
    count_triples_all_nonsquare,
    count_triples_all_square,
    count_zero_containing,
)
from diffspec.ff import field_ctx
from diffspec.sbox import n4_brute

ctx = field_ctx(11)
print(f"GF(11): all-square triples {count_triples_all_square(ctx).brute}, "
      f"all-nonsquare triples {count_triples_all_nonsquare(ctx).brute}")

total = 0
for pattern in ALL_SIGN_PATTERNS:
    cnt = count_signed_quadruples(ctx, pattern)
    assert cnt == closed_signed_count(pattern, 11, 1)
    total += cnt
for z in range(1, 5):
    cnt = count_zero_containing(ctx, z)
    assert cnt == closed_zero_count(z, 11)
    total += cnt

n4 = n4_brute(build_fu(ctx, 1))
assert total == n4 == closed_n4(11, 1)
print(f"16 sign patterns + 4 zero classes sum to N4 = {n4}")
print("ok")
