"""The circle and line models of a spherical-series representation.

Shows the two realizations of the same vectors, the group action in each,
the transfer maps between them, and the unitarity of the principal series.
"""

import numpy as np

from sl2rep import (CircleVector, GroupElement, SpectralParameter, act_circle,
                    act_line, circle_to_line, l2_circle, l2_line, line_to_circle)

par = SpectralParameter.principal(1.0)
e0 = CircleVector.basis(0)

print("the rotation-invariant vector has norm", l2_circle(e0))

g = GroupElement.from_iwasawa(0.5, 0.4, 2.0)
moved = act_circle(g, e0, par)
print("after acting by a generic element the norm is still", l2_circle(moved))

u = circle_to_line(e0, par)
print("\nline model of the same vector: u(x) = (1 + x^2)^((lam-1)/2)")
print("u(0) =", u(0.0), "   u(1) =", u(1.0))
print("line-model norm (with the 1/pi normalization):", l2_line(u))

print("\nthe Borel subgroup acts by translations and dilations:")
shifted = act_line(GroupElement.translation(1.5), u, par)
print("translation: u(2.5) ->", shifted(2.5 + 1.5), "vs", u(2.5))
dilated = act_line(GroupElement([[2.0, 0.0], [0.0, 0.5]]), u, par)
print("dilation: matches 2^(lam-1) u(x/4):",
      np.allclose(dilated(3.0), 2.0 ** (par.lam - 1) * u(0.75)))

print("\ntransfers commute with the action:")
via_line = line_to_circle(act_line(g, u, par), par)
th = np.linspace(0.1, 6.2, 7)
print("max deviation:", np.abs(via_line.evaluate(th) - moved.evaluate(th)).max())
