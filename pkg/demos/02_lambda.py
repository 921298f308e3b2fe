"""The character sum lambda: direct enumeration, exact recursion, and the
elliptic-curve point count that ties them together."""

from diffspec.charsum import lambda_direct, lambda_extend, point_count_cubic
from diffspec.ff import field_ctx

for p, n in [(7, 1), (7, 3), (3, 5), (31, 2)]:
    direct = lambda_direct(p, n).value
    closed = lambda_extend(p, n).value
    assert direct == closed
    pts = point_count_cubic(field_ctx(p, n))
    q = p**n
    assert pts == q + 1 + direct
    print(f"lambda({p},{n}) = {direct}  (curve has {pts} points over GF({q}))")
print("ok")
