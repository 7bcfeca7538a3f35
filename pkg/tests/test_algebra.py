import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sl2rep import (GroupElement, ComplexGroupElement, UNIT_FORM, UnimodularForm,
                    compose, iwasawa, transform_form)
from sl2rep.algebra import ad_norm, random_element
from sl2rep.errors import InvariantViolation

# determinant drift scales like ||g||^4 * eps, so keep the elements moderate:
# heights up to 1.2 give ||gh|| <= e^2.4 and drift well under the 1e-10 form tol
COORD = st.floats(min_value=-2.0, max_value=2.0, allow_nan=False)
HEIGHT = st.floats(min_value=-1.2, max_value=1.2, allow_nan=False)
ANGLE = st.floats(min_value=0.0, max_value=2 * math.pi, allow_nan=False)


def test_identity_composition():
    g = GroupElement.from_iwasawa(0.7, -0.4, 1.2)
    e = GroupElement.identity()
    assert np.allclose(compose(e, g).mat, g.mat)
    assert np.allclose(compose(g, g.inv()).mat, np.eye(2), atol=1e-12)


def test_diagonal_product():
    a = GroupElement([[2.0, 0.0], [0.0, 0.5]])
    b = GroupElement([[3.0, 0.0], [0.0, 1.0 / 3.0]])
    prod = compose(a, b)
    assert np.allclose(prod.mat, [[6.0, 0.0], [0.0, 1.0 / 6.0]])


def test_determinant_rejected():
    with pytest.raises(InvariantViolation):
        GroupElement([[1.0, 0.0], [0.0, 2.0]])


def test_constructor_determinant_tight(rng):
    for _ in range(50):
        g = random_element(rng, scale=1.5)
        assert abs(g.det() - 1.0) <= 1e-12


@settings(max_examples=50, deadline=None)
@given(x=COORD, h=HEIGHT, t=ANGLE)
def test_iwasawa_roundtrip(x, h, t):
    g = GroupElement.from_iwasawa(x, h, t)
    shift, height, angle = iwasawa(g)
    back = GroupElement.from_iwasawa(shift, height, angle)
    assert np.abs(back.mat - g.mat).max() <= 1e-10


def test_iwasawa_examples():
    assert iwasawa(GroupElement.identity()) == (0.0, 0.0, 0.0)
    shift, height, angle = iwasawa(GroupElement([[2.0, 0.0], [0.0, 0.5]]))
    assert abs(shift) <= 1e-14 and abs(height - math.log(2)) <= 1e-14 and abs(angle) <= 1e-14
    shift, height, angle = iwasawa(GroupElement([[1.0, 5.0], [0.0, 1.0]]))
    assert abs(shift - 5.0) <= 1e-14 and abs(height) <= 1e-14 and abs(angle) <= 1e-14


def test_transform_form_identity_and_diagonal():
    assert transform_form(GroupElement.identity(), UNIT_FORM).close_to(UNIT_FORM, 1e-14)
    # diag(1/2, 2) sends the unit form to 4 x^2 + y^2 / 4
    out = transform_form(GroupElement([[0.5, 0.0], [0.0, 2.0]]), UNIT_FORM)
    assert out.close_to(UnimodularForm(4.0, 0.0, 0.25), 1e-12)


def test_transform_form_determinant_preserved(rng):
    for _ in range(100):
        g = random_element(rng, scale=1.5)
        out = transform_form(g, UNIT_FORM)
        assert abs(out.det() - 1.0) <= 1e-10


@settings(max_examples=40, deadline=None)
@given(x1=COORD, h1=HEIGHT, t1=ANGLE, x2=COORD, h2=HEIGHT, t2=ANGLE)
def test_action_property(x1, h1, t1, x2, h2, t2):
    g = GroupElement.from_iwasawa(x1, h1, t1)
    h = GroupElement.from_iwasawa(x2, h2, t2)
    lhs = transform_form(compose(g, h), UNIT_FORM)
    rhs = transform_form(g, transform_form(h, UNIT_FORM))
    assert lhs.close_to(rhs, 1e-9)


def test_complex_element_conjugate_inverse():
    g = ComplexGroupElement([[1.0 + 0.2j, 0.1j], [0.0, 1.0 / (1.0 + 0.2j)]])
    gc = g.conj()
    assert np.allclose(gc.mat, np.conj(g.mat))
    assert np.allclose(compose(g, g.inv()).mat, np.eye(2), atol=1e-12)


def test_ad_norm_at_least_one(rng):
    assert ad_norm(GroupElement.identity()) == pytest.approx(1.0)
    for _ in range(20):
        g = random_element(rng, scale=1.0)
        assert ad_norm(g) >= 1.0 - 1e-12
