"""Group elements, Iwasawa coordinates, and quadratic forms.

Walks through the basic algebra: composing elements, reading off Iwasawa
coordinates, pushing forms around, and the two faces of the positive domain
(point pairs on one side, diagonal factorizations on the other).
"""

import numpy as np

from sl2rep import (GroupElement, PointPair, UNIT_FORM, compose, form_from_points,
                    is_positive_form, iwasawa, transform_form)
from sl2rep.geometry import diagonal_form, diagonalize_form

g = GroupElement.from_iwasawa(0.8, -0.3, 1.1)
print("element:\n", g.mat.real)
print("iwasawa coordinates (shift, height, angle):", iwasawa(g))

h = GroupElement.translation(2.0)
print("\ncomposition is matrix multiplication:")
print(compose(h, g).mat.real)

print("\nthe unit form x^2 + y^2 pushed through diag(1/2, 2):")
print(transform_form(GroupElement([[0.5, 0.0], [0.0, 2.0]]), UNIT_FORM))

print("\na pair (a, b) with Im a > 0 > Im b determines a positive-domain form:")
pair = PointPair(0.4 + 2.0j, -1.0 - 0.5j)
form = form_from_points(pair)
print(form, "| positive:", is_positive_form(form))

print("\nthe same form factors through a real basis change and a diagonal form:")
gg, z = diagonalize_form(form)
print("real factor:\n", gg.mat.real)
print("diagonal parameter z =", z, "with |arg z| =", abs(np.angle(z)), "< pi/4")
back = transform_form(gg, diagonal_form(z))
print("recomposition error:",
      max(abs(back.p - form.p), abs(back.q - form.q), abs(back.s - form.s)))
