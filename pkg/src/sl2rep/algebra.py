"""Unimodular 2x2 matrices, Iwasawa coordinates, and the action on quadratic forms.

Conventions fixed here and used everywhere else:

* ``a(h) = diag(e^h, e^-h)`` and ``k(t)`` is the rotation by angle ``t``;
  the Iwasawa order is ``g = n(shift) a(height) k(angle)``.
* A matrix acts on a quadratic form by ``g(P) = P o g^{-1}``, so that
  ``diag(1/a, a)`` sends ``x^2 + y^2`` to ``a^2 x^2 + a^-2 y^2``.
"""

from __future__ import annotations

import math

import numpy as np

from .errors import DomainError, InvariantViolation

_DET_TOL = 1e-9


def _as_matrix(entries):
    m = np.array(entries, dtype=complex)
    if m.shape != (2, 2):
        raise DomainError(f"expected a 2x2 matrix, got shape {m.shape}")
    return m


class ComplexGroupElement:
    """Element of SL(2,C) stored as an immutable 2x2 complex matrix."""

    __slots__ = ("mat",)
    is_real = False

    def __init__(self, entries, det_tol=_DET_TOL):
        m = _as_matrix(entries)
        det = m[0, 0] * m[1, 1] - m[0, 1] * m[1, 0]
        if abs(det - 1.0) > det_tol:
            raise InvariantViolation(f"determinant {det} differs from 1 beyond {det_tol}")
        m.setflags(write=False)
        object.__setattr__(self, "mat", m)

    def __setattr__(self, name, value):
        raise AttributeError("group elements are immutable")

    @property
    def a(self):
        return self.mat[0, 0]

    @property
    def b(self):
        return self.mat[0, 1]

    @property
    def c(self):
        return self.mat[1, 0]

    @property
    def d(self):
        return self.mat[1, 1]

    def det(self):
        return self.mat[0, 0] * self.mat[1, 1] - self.mat[0, 1] * self.mat[1, 0]

    def inv(self):
        # adjugate of a unimodular matrix
        m = self.mat
        return type(self)([[m[1, 1], -m[0, 1]], [-m[1, 0], m[0, 0]]])

    def conj(self):
        return type(self)(np.conj(self.mat))

    def entries(self):
        return tuple(self.mat.ravel())

    @classmethod
    def identity(cls):
        return cls(np.eye(2))

    @classmethod
    def diagonal(cls, top):
        """diag(top, 1/top) for a nonzero complex number."""
        if top == 0:
            raise DomainError("diagonal entry must be nonzero")
        return cls([[top, 0.0], [0.0, 1.0 / top]])

    def __repr__(self):
        return f"{type(self).__name__}({self.mat.tolist()})"


class GroupElement(ComplexGroupElement):
    """Element of SL(2,R); entries are checked to be real."""

    __slots__ = ()
    is_real = True

    def __init__(self, entries, det_tol=_DET_TOL):
        m = _as_matrix(entries)
        if np.abs(m.imag).max() > 1e-12:
            raise DomainError("real group element with non-real entries")
        super().__init__(m.real.astype(float), det_tol)

    @property
    def real_mat(self):
        return self.mat.real

    @classmethod
    def translation(cls, shift):
        """Upper unipotent n(shift)."""
        return cls([[1.0, float(shift)], [0.0, 1.0]])

    @classmethod
    def dilation(cls, height):
        """a(height) = diag(e^height, e^-height)."""
        e = math.exp(float(height))
        return cls([[e, 0.0], [0.0, 1.0 / e]])

    @classmethod
    def rotation(cls, angle):
        c, s = math.cos(float(angle)), math.sin(float(angle))
        return cls([[c, -s], [s, c]])

    @classmethod
    def from_iwasawa(cls, shift, height, angle):
        return compose(cls.translation(shift), compose(cls.dilation(height), cls.rotation(angle)))


def compose(g, h):
    """Matrix product; the result keeps the tighter of the two element types."""
    m = g.mat @ h.mat
    if g.is_real and h.is_real:
        return GroupElement(m.real)
    return ComplexGroupElement(m)


def iwasawa(g):
    """Decompose a real element as n(shift) a(height) k(angle).

    Returns (shift, height, angle) with ``a = diag(e^height, e^-height)``;
    the height of ``diag(a, 1/a)`` is ``ln a``.
    """
    if not g.is_real:
        raise DomainError("Iwasawa coordinates are defined for real elements")
    m = g.mat.real
    c, d = m[1, 0], m[1, 1]
    y = 1.0 / (c * c + d * d)
    height = 0.5 * math.log(y)
    shift = (m[0, 0] * c + m[0, 1] * d) * y
    # k = a^{-1} n(-shift) g
    e = math.exp(height)
    k00 = (m[0, 0] - shift * c) / e
    k10 = c * e
    angle = math.atan2(k10, k00)
    return shift, height, angle


class UnimodularForm:
    """Symmetric quadratic form p x^2 + 2 q x y + s y^2 with determinant 1."""

    __slots__ = ("p", "q", "s")

    def __init__(self, p, q, s, det_tol=1e-10):
        p, q, s = complex(p), complex(q), complex(s)
        det = p * s - q * q
        if abs(det - 1.0) > det_tol:
            raise InvariantViolation(f"form determinant {det} differs from 1 beyond {det_tol}")
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "q", q)
        object.__setattr__(self, "s", s)

    def __setattr__(self, name, value):
        raise AttributeError("forms are immutable")

    @classmethod
    def from_matrix(cls, m, det_tol=1e-10):
        m = np.asarray(m, dtype=complex)
        return cls(m[0, 0], 0.5 * (m[0, 1] + m[1, 0]), m[1, 1], det_tol=det_tol)

    @property
    def matrix(self):
        return np.array([[self.p, self.q], [self.q, self.s]])

    @property
    def real_matrix(self):
        return self.matrix.real

    @property
    def imag_matrix(self):
        return self.matrix.imag

    def det(self):
        return self.p * self.s - self.q * self.q

    def __call__(self, x, y):
        """Evaluate the form; accepts scalars or arrays."""
        return self.p * x * x + 2.0 * self.q * x * y + self.s * y * y

    def on_circle(self, theta):
        c, s = np.cos(theta), np.sin(theta)
        return self(c, s)

    def close_to(self, other, tol=1e-9):
        return max(abs(self.p - other.p), abs(self.q - other.q), abs(self.s - other.s)) <= tol

    def __repr__(self):
        return f"UnimodularForm(p={self.p}, q={self.q}, s={self.s})"


#: The reference form x^2 + y^2.
UNIT_FORM = UnimodularForm(1.0, 0.0, 1.0)


def transform_form(g, form, det_tol=1e-10):
    """Push a form through a group element: g(P) = P o g^{-1}."""
    gi = g.inv().mat
    m = gi.T @ form.matrix @ gi
    return UnimodularForm.from_matrix(m, det_tol=det_tol)


def mobius(g, z):
    """Fractional-linear action of the matrix on a point of the complex plane."""
    m = g.mat
    num = m[0, 0] * z + m[0, 1]
    den = m[1, 0] * z + m[1, 1]
    if den == 0:
        raise DomainError("Mobius image is the point at infinity")
    return num / den


def _sl2_coords(x):
    """Coordinates of a traceless 2x2 matrix in the basis H, E+F, E-F."""
    return np.array([x[0, 0].real, 0.5 * (x[0, 1] + x[1, 0]).real, 0.5 * (x[0, 1] - x[1, 0]).real])


_H = np.array([[1.0, 0.0], [0.0, -1.0]])
_EPF = np.array([[0.0, 1.0], [1.0, 0.0]])
_EMF = np.array([[0.0, 1.0], [-1.0, 0.0]])


def ad_norm(g):
    """Operator norm of Ad(g) on sl2 in the fixed basis H, E+F, E-F."""
    m, mi = g.mat.real, g.inv().mat.real
    cols = [_sl2_coords(m @ b @ mi) for b in (_H, _EPF, _EMF)]
    return float(np.linalg.norm(np.array(cols).T, 2))


def random_element(rng, scale=1.0):
    """Seeded random real element n(x) a(h) k(t) with bounded coordinates."""
    x = rng.uniform(-scale, scale)
    h = rng.uniform(-scale, scale)
    t = rng.uniform(0.0, 2.0 * math.pi)
    return GroupElement.from_iwasawa(x, h, t)
