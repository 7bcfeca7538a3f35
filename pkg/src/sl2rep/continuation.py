"""Analytic continuation of the spherical vector and the spherical function.

For a form R with positive definite real part, the continued vector is
``theta -> R(cos theta, sin theta)^((lam-1)/2)`` (principal branch).  The
one-parameter boundary family used throughout is

    Q_eps(x, y) = a (x - i eps y)(eps x + i y),   a = 2 / (1 + eps^2),

which stays inside the positive domain for 0 < eps <= 1 and equals
x^2 + y^2 at eps = 1.
"""

from __future__ import annotations

import dataclasses

import mpmath
import numpy as np

from .algebra import ComplexGroupElement, UNIT_FORM, UnimodularForm, compose, transform_form
from .errors import DomainError, InvariantViolation
from .geometry import diagonalize_form, is_positive_form
from .repmodels import CircleVector, LineVector

_BRANCH_PROBE = 4096


@dataclasses.dataclass(frozen=True)
class BoundaryForm:
    """Member of the boundary family with its normalization constant."""

    eps: float
    scale: float
    form: UnimodularForm


def boundary_form(eps):
    """Q_eps with determinant 1; eps must lie in (0, 1]."""
    eps = float(eps)
    if not 0.0 < eps <= 1.0:
        raise DomainError("eps must lie in (0, 1]; the real part degenerates at 0")
    a = 2.0 / (1.0 + eps * eps)
    form = UnimodularForm(a * eps, 0.5j * a * (1.0 - eps * eps), a * eps, det_tol=1e-12)
    return BoundaryForm(eps, a, form)


def spherical_vector(form, par, n0=None, tol=1e-10):
    """Circle model of the continued spherical vector attached to a form."""
    if not is_positive_form(form):
        raise DomainError("form is outside the positive domain: branch ambiguity")
    probe = form.on_circle(np.arange(_BRANCH_PROBE) * (2 * np.pi / _BRANCH_PROBE))
    if probe.real.min() <= 0:
        raise InvariantViolation("real part of the form is not positive on the circle")
    half = (par.lam - 1.0) / 2.0

    def fn(theta):
        return np.exp(half * np.log(form.on_circle(theta)))

    return CircleVector.from_function(fn, n0=n0 or 1024, tol=tol)


def line_restriction(eps, par):
    """Line model of the boundary-family vector: x -> q_eps(x)^((lam-1)/2)
    with q_eps(x) = a (x - i eps)(eps x + i)."""
    bf = boundary_form(eps)
    a, e = bf.scale, bf.eps
    half = (par.lam - 1.0) / 2.0

    def fn(x):
        q = a * (e * (x * x + 1.0) + 1j * x * (1.0 - e * e))
        return np.exp(half * np.log(q))

    pts = (-1.0 / e, -1.0, -e, 0.0, e, 1.0, 1.0 / e)
    return LineVector(fn, quad_points=pts, par=par, feature_scale=e,
                      axis_value=complex((a * e) ** ((par.lam - 1.0) / 2.0)))


def boundary_modulus(eps):
    """m(x) = |q_eps(x)|, vectorized."""
    bf = boundary_form(eps)
    a, e = bf.scale, bf.eps

    def m(x):
        x = np.asarray(x, dtype=float)
        return a * np.sqrt((e * (x * x + 1.0)) ** 2 + (x * (1.0 - e * e)) ** 2)

    return m


def boundary_argument(eps):
    """arg q_eps(x), vectorized; odd, with extrema +-(pi/2 - 2 atan eps) at x = +-1."""
    bf = boundary_form(eps)
    e = bf.eps

    def arg(x):
        x = np.asarray(x, dtype=float)
        return np.arctan2(x * (1.0 - e * e), e * (x * x + 1.0))

    return arg


def spherical_function(par, g, tol=1e-10):
    """S(g) = <pi(g) v, v> by circle quadrature; needs g(Q) in the positive domain."""
    form = transform_form(g, UNIT_FORM)
    vec = spherical_vector(form, par, tol=tol)
    return complex(vec.values.mean())


def spherical_function_diagonal(par, w):
    """S(diag(1/w, w)) continued to |arg w| < pi/2 via the Legendre function:

    S = P_nu(cosh(2 log w)) = 2F1(-nu, nu+1; 1; (1 - cosh(2 log w))/2),
    nu = (lam - 1)/2.  Agrees with circle quadrature where both are defined.
    """
    w = complex(w)
    if w == 0 or abs(np.angle(w)) >= np.pi / 2:
        raise DomainError("diagonal continuation requires |arg w| < pi/2")
    nu = (par.lam - 1.0) / 2.0
    z = np.cosh(2.0 * np.log(w))
    with mpmath.workdps(30):
        val = mpmath.hyp2f1(-nu, nu + 1.0, 1.0, (1.0 - z) / 2.0)
    return complex(val)


def complex_boundary_element(eps):
    """Some g in SL(2,C) with g(Q) = Q_eps, assembled from the diagonal factorization."""
    bf = boundary_form(eps)
    g, z = diagonalize_form(bf.form)
    return compose(g, ComplexGroupElement.diagonal(1.0 / z))


def norm_sq_oracle(par, eps):
    """||v_eps||^2 through the spherical function:

    ||pi(g) v||^2 = S(conj(g)^-1 g), and for the boundary family the product
    conj(g_eps)^-1 g_eps is the diagonal diag(1/w, w) with w = z / conj(z);
    evaluated by the continued Legendre form, which remains valid where the
    circle quadrature does not.
    """
    bf = boundary_form(eps)
    _, z = diagonalize_form(bf.form)
    w = z / np.conj(z)
    val = spherical_function_diagonal(par, w)
    if abs(val.imag) > 1e-8 * abs(val):
        raise InvariantViolation(f"norm oracle returned non-real value {val}")
    return float(val.real)
