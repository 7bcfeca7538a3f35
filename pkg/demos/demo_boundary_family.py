"""The boundary family of forms and the growth of its vectors.

The forms Q_eps approach the boundary of the positive domain as eps -> 0.
The attached vectors develop (i) a logarithmically divergent norm at fixed
spectral parameter and (ii) exponential growth in the frequency t, with rate
pi/2 - O(eps).  Both are measured here, and the squared norm is cross-checked
against the continued spherical function.
"""

import math

from sl2rep import (SpectralParameter, boundary_form, l2_circle, lower_bound_check,
                    norm_sq_oracle, norm_sweep, spherical_vector)

print("normalization constants a(eps) = 2/(1+eps^2):")
for eps in (1.0, 1.0 / 3.0, 0.1):
    print(f"  eps={eps:.3f}: a={boundary_form(eps).scale:.6f}")

par = SpectralParameter.principal(1.0)
print("\nlog law of the squared norm (t = 1):")
rows, diag = norm_sweep(par, [2.0 ** -k for k in range(3, 19, 3)])
for r in rows:
    print(f"  eps=2^{math.log2(r.eps):4.0f}: ||v||^2 = {r.norm_sq:9.4f}  "
          f"ratio to ln(1/eps) = {r.norm_sq / math.log(1 / r.eps):.3f}")
print(f"  regression slope {diag['slope']:.3f}, R^2 {diag['r_squared']:.5f}")

print("\nexponential growth in t at eps = 0.05 (margins over the reference rate):")
for t in (5, 10, 20):
    row = lower_bound_check(SpectralParameter.principal(t), 0.05)
    print(f"  t={t:3d}: log ||v||^2 = {row.log_lhs:8.3f}, reference "
          f"{row.log_rhs:8.3f}, margin {row.margin:+.3f}")

print("\nquadrature vs the continued spherical function (two independent routes):")
for t in (0.0, 5.0):
    p = SpectralParameter.principal(t)
    for eps in (0.1, 0.01):
        direct = l2_circle(spherical_vector(boundary_form(eps).form, p)) ** 2
        oracle = norm_sq_oracle(p, eps)
        print(f"  t={t:3.0f} eps={eps:5.2f}: {direct:12.6f} vs {oracle:12.6f} "
              f"(rel {abs(direct - oracle) / direct:.1e})")
