"""Forms from point pairs, the positive domain, and its diagonal factorization.

Unimodular quadratic forms on C^2 correspond to unordered pairs of distinct
points of the projective line.  Pairs (a, b) with Im a > 0 > Im b land in the
open set of forms whose real part is positive definite; every such form
factors as a real basis change applied to ``z^2 x^2 + z^-2 y^2`` with
|arg z| < pi/4.
"""

from __future__ import annotations

import dataclasses

import numpy as np
from scipy.linalg import eigh

from .algebra import GroupElement, UnimodularForm
from .errors import DomainError


@dataclasses.dataclass(frozen=True)
class PointPair:
    """Two distinct points of the affine chart of the projective line."""

    a: complex
    b: complex

    def __post_init__(self):
        if self.a == self.b:
            raise DomainError("points must be distinct")

    def in_product_domain(self):
        """True when the pair lies in (upper half-plane) x (lower half-plane)."""
        return self.a.imag > 0 and self.b.imag < 0


def form_from_points(pair):
    """Unimodular form with zero set {a, b} on the projective line.

    The raw form ((a y - x)(b y - x)) / (a - b) always has determinant -1/4;
    it is rescaled by +-2i to determinant 1, the sign fixed so that the pair
    (i, -i) maps exactly to x^2 + y^2 and pairs in H x conj(H) get the
    representative with positive definite real part.
    """
    a, b = complex(pair.a), complex(pair.b)
    den = a - b
    p0 = 1.0 / den
    q0 = -(a + b) / (2.0 * den)
    s0 = a * b / den
    cand = UnimodularForm(2j * p0, 2j * q0, 2j * s0)
    if is_positive_form(cand):
        return cand
    neg = UnimodularForm(-2j * p0, -2j * q0, -2j * s0)
    if is_positive_form(neg):
        return neg
    # deterministic representative outside the positive domain
    if cand.p.real > 0 or (cand.p.real == 0 and cand.p.imag > 0):
        return cand
    return neg


def is_positive_form(form):
    """True iff the real part of the form is positive definite."""
    m = form.real_matrix
    return m[0, 0] > 0 and (m[0, 0] * m[1, 1] - m[0, 1] * m[1, 0]) > 0


def diagonal_form(z):
    """The form z^2 x^2 + z^-2 y^2."""
    z = complex(z)
    return UnimodularForm(z * z, 0.0, 1.0 / (z * z))


def diagonalize_form(form):
    """Factor a positive-domain form as g(diagonal_form(z)) with real g.

    Simultaneously diagonalizes the real and imaginary parts through the
    generalized symmetric eigenproblem with the positive definite real part
    as the metric.  Returns (g, z) with det g = 1 and |arg z| < pi/4; only
    the recomposition is canonical.
    """
    if not is_positive_form(form):
        raise DomainError("form is outside the positive domain")
    a_re = form.real_matrix
    b_im = form.imag_matrix
    w, v = eigh(b_im, a_re)
    # descending eigenvalue order; diagonal inputs then keep their z
    w = w[::-1]
    v = v[:, ::-1]
    det_v = v[0, 0] * v[1, 1] - v[0, 1] * v[1, 0]
    if det_v < 0:
        v = v.copy()
        v[:, 1] = -v[:, 1]
        det_v = -det_v
    v_hat = v / np.sqrt(det_v)
    p1 = (1.0 + 1j * w[0]) / det_v
    z = np.sqrt(p1)
    return GroupElement(v_hat), complex(z)
