"""Differential spectrum of the binomial: closed form versus brute force."""

from diffspec.family import build_fu, closed_spectrum, closed_uniformity
from diffspec.ff import field_ctx
from diffspec.sbox import ddt_compute, is_locally_apn, spectrum_from_ddt, uniformity

for p, n in [(19, 1), (3, 3), (7, 3)]:
    ctx = field_ctx(p, n)
    q = ctx.q
    ddt = ddt_compute(build_fu(ctx, 1))
    spec = spectrum_from_ddt(ddt)
    assert spec == closed_spectrum(p, n)
    assert uniformity(ddt) == closed_uniformity(p, n) == (q + 1) // 4
    apn = is_locally_apn(ddt, p)
    print(f"GF({q}): uniformity {(q + 1) // 4}, locally-APN {apn.verdict}, "
          f"spectrum {spec}")
print("ok")
