"""Heights, horocycle diameters, and fiber-counting weights for the modular
lattice.

Near the cusp the horocycle diameter decays while the integer fiber count
grows; their product stays bounded, which is the geometric input behind
sup-norm control of cuspidal data.  The one-dimensional mean-value bound at
the end is the analytic kernel of that argument.
"""

import math

import numpy as np

from sl2rep import (GroupElement, dw_bounded_scan, horocycle_diameter,
                    mean_value_bound, siegel_samples, weight)

print("height, diameter, weight along the diagonal direction:")
print("  h      d(h)        w(h)        d*w")
for h in (1.0, 2.0, 4.0, 6.0, 8.0):
    g = GroupElement.dilation(h)
    d, w = horocycle_diameter(g), weight(g)
    print(f"  {h:3.0f}  {d:10.3e}  {w:10.3e}  {d * w:10.3e}")

rng = np.random.default_rng(1)
samples = siegel_samples(rng, 200)
max_prod, rows, slope = dw_bounded_scan(samples)
print(f"\nscan over 200 sample points with heights in [1, 10]:")
print(f"  max product {max_prod:.4f}, regression slope of ln(d w) vs h: {slope:+.3f}")
print("  (negative slope = the product decays; boundedness is what matters)")

print("\nmean-value bound for zero-mean periodic functions:")
sup, bound = mean_value_bound(np.sin, 2 * math.pi)
print(f"  sin on a 2 pi period: sup |f| = {sup:.3f} <= (L/2) sup |f'| = {bound:.3f}")
