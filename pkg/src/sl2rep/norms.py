"""Norms: L2 in both models, the complementary-series pairing, and Sobolev norms.

Two Sobolev flavors are kept deliberately distinct:

* ``sobolev_fourier`` is the circle-model multiplier norm
  ``(sum |a_n|^2 (1 + mu + 2 n^2)^s)^(1/2)``;
* ``sobolev_line`` is the plain derivative norm on the line,
  ``(sum_{j<=k} ||u^(j)||_L2^2)^(1/2)`` (no 1/pi factor).

They agree only up to constants, and only for vectors supported on a fixed
compact window; the comparability is measured by tests, never assumed.
"""

from __future__ import annotations

import math

import numpy as np

from .errors import DomainError, TruncationError
from .quadrature import ChebProxy, integrate_line
from .repmodels import LineVector

_GL16 = np.polynomial.legendre.leggauss(16)
_GL8 = np.polynomial.legendre.leggauss(8)


def l2_circle(f):
    """Invariant norm (1/2pi int |f|^2)^(1/2) from the sample grid."""
    v = f.values
    return math.sqrt(float(np.mean(v.real ** 2 + v.imag ** 2)))


def l2_line(u, epsabs=1e-12, epsrel=1e-10):
    """((1/pi) int |u|^2 dx)^(1/2); the line-model invariant norm for lam = it."""
    if u.par is not None and u.par.series != "principal":
        raise DomainError("line-model L2 is the invariant norm only for the principal "
                          "series; use complementary_norm instead")

    def f(x):
        v = u(x)
        return v.real ** 2 + v.imag ** 2

    val = integrate_line(f, points=u.quad_points, support=u.support,
                         epsabs=epsabs, epsrel=epsrel)
    return math.sqrt(max(val, 0.0) / math.pi)


# ---------------------------------------------------------------------------
# complementary-series pairing


def _panel_edges(scale, smax):
    base = scale / 8.0
    edges = [0.0, base]
    while edges[-1] < smax:
        edges.append(edges[-1] * 2.0)
    pos = np.array(edges)
    return np.concatenate([-pos[::-1][:-1], pos])


def _gl(a, b, rule):
    x, w = rule
    return (b - a) / 2.0 * x + (b + a) / 2.0, (b - a) / 2.0 * w


def complementary_norm(u, par, smax=2.0 ** 21):
    """Norm from the pairing int |x - x'|^(-lam-1) u(x) conj(u(x')) dx dx'.

    Valid for real lam in (-1, 0), where the kernel is positive definite.
    The double integral is reduced to the correlation C(w) = int u conj(u(.-w))
    and an outer integral over w > 0; each correlation is split at w/2 so the
    fine feature of each factor sits at a fixed location, and all pieces are
    evaluated on shared geometric Gauss-Legendre panels.
    """
    if par.series != "complementary":
        raise DomainError("the pairing norm is defined for the complementary series")
    lam = float(par.lam.real)
    alpha = -lam - 1.0

    scale = min(u.feature_scale, 1.0)
    if u.support is not None:
        smax = min(smax, 4.0 * max(abs(u.support[0]), abs(u.support[1]), 1.0))
    edges = _panel_edges(scale, smax)
    ns, ws = [], []
    for a, b in zip(edges[:-1], edges[1:]):
        x, w = _gl(a, b, _GL16)
        ns.append(x)
        ws.append(w)
    s_nodes = np.concatenate(ns)
    s_wgts = np.concatenate(ws)
    pan_hi = np.repeat(edges[1:], 16)
    pan_lo = np.repeat(edges[:-1], 16)
    u_s = u(s_nodes)

    c_zero = float(np.sum(s_wgts * (u_s.real ** 2 + u_s.imag ** 2)))

    w0 = scale * 2.0 ** -10
    j_lo = math.floor(math.log2(w0))
    j_hi = int(math.ceil(math.log2(smax)))
    wn, ww = [], []
    for j in range(j_lo, j_hi):
        x, w = _gl(2.0 ** j, 2.0 ** (j + 1), _GL8)
        wn.append(x)
        ww.append(w)
    w_nodes = np.concatenate(wn)
    w_wgts = np.concatenate(ww)

    corr = np.empty(len(w_nodes))
    for k, wk in enumerate(w_nodes):
        h = wk / 2.0
        m1 = pan_hi <= h
        p1 = np.sum(s_wgts[m1] * u_s[m1] * np.conj(u(s_nodes[m1] - wk)))
        idx = np.searchsorted(edges, h, side="right") - 1
        if 0 <= idx < len(edges) - 1 and h > edges[idx]:
            x, wq = _gl(edges[idx], h, _GL16)
            p1 += np.sum(wq * u(x) * np.conj(u(x - wk)))
        m2 = pan_lo >= -h
        p2 = np.sum(s_wgts[m2] * u(s_nodes[m2] + wk) * np.conj(u_s[m2]))
        idx2 = np.searchsorted(edges, -h)
        if 0 < idx2 < len(edges) and -h < edges[idx2]:
            x, wq = _gl(-h, edges[idx2], _GL16)
            p2 += np.sum(wq * u(x + wk) * np.conj(u(x)))
        corr[k] = (p1 + p2).real

    head = 2.0 * c_zero * w0 ** (1.0 + alpha) / (1.0 + alpha)
    body = 2.0 * float(np.sum(w_wgts * w_nodes ** alpha * corr))
    total = head + body
    if total < -1e-9 * max(c_zero, 1.0):
        raise TruncationError(f"pairing norm came out negative ({total:.3e})")
    return math.sqrt(max(total, 0.0))


# ---------------------------------------------------------------------------
# Sobolev norms


def sobolev_fourier(f, s, par, tail_tol=1e-10):
    """Multiplier norm (sum |a_n|^2 (1 + mu + 2 n^2)^s)^(1/2) on the circle."""
    ks, a = f.coeff_array()
    mags = np.abs(a)
    scale = mags.max()
    if scale > 0:
        edge = max(mags[0], mags[-1])
        if edge > tail_tol * scale:
            raise TruncationError("coefficient tail is not resolved; "
                                  "refine the sample grid before taking Sobolev norms")
    mult = (1.0 + par.mu + 2.0 * ks.astype(float) ** 2) ** float(s)
    return math.sqrt(float(np.sum(mult * mags ** 2)))


def _cheb_stack(u, k, ref_scale=0.0):
    a, b = u.support
    proxy = ChebProxy.fit(lambda x: u(x), a, b, ref_scale=ref_scale)
    out = [proxy]
    for _ in range(k):
        out.append(out[-1].deriv())
    return out


def sobolev_line(u, k, fd_step=1e-5, ref_scale=0.0):
    """Plain line Sobolev norm of order k.

    Strategy: analytic derivatives when the vector carries a factory;
    otherwise a Chebyshev interpolant on the (required) compact support;
    as a last resort, iterated central differences with a Richardson check.
    """
    k = int(k)
    if k < 0:
        raise DomainError("Sobolev order must be >= 0")
    if u.derivative_factory is not None:
        total = 0.0
        for j in range(k + 1):
            dj = u.derivative_factory(j)

            def f(x, dj=dj):
                v = np.asarray(dj(x), dtype=complex)
                return v.real ** 2 + v.imag ** 2

            total += integrate_line(f, points=u.quad_points, support=u.support)
        return math.sqrt(total)
    if u.support is not None:
        stack = _cheb_stack(u, k, ref_scale=ref_scale)
        return math.sqrt(sum(p.l2_norm_sq() for p in stack))
    return _sobolev_line_fd(u, k, fd_step)


def _sobolev_line_fd(u, k, h):
    def deriv(fn, x):
        return (fn(x + h) - fn(x - h)) / (2.0 * h)

    fns = [lambda x: u(x)]
    for _ in range(k):
        prev = fns[-1]
        fns.append(lambda x, prev=prev: deriv(prev, x))
    if k >= 1:
        probe = np.array([0.37, -1.13, 2.41])
        a = fns[-1](probe)
        hh = h / 2.0
        prev = fns[-2]
        b = (prev(probe + hh) - prev(probe - hh)) / (2.0 * hh)
        scale = np.abs(a).max() + 1.0
        if np.abs(a - b).max() > 1e-4 * scale:
            raise TruncationError("finite-difference derivatives failed the Richardson "
                                  "check; evaluator may not be smooth")
    total = 0.0
    for fn in fns:
        def f(x, fn=fn):
            v = np.asarray(fn(x), dtype=complex)
            return v.real ** 2 + v.imag ** 2

        total += integrate_line(f, points=u.quad_points, support=u.support)
    return math.sqrt(total)


# ---------------------------------------------------------------------------
# Lie-algebra action in the circle model (exact on Fourier coefficients)


def _mult_cos(d):
    out = {}
    for n, v in d.items():
        out[n + 1] = out.get(n + 1, 0.0j) + 0.5 * v
        out[n - 1] = out.get(n - 1, 0.0j) + 0.5 * v
    return out


def _mult_sin(d):
    out = {}
    for n, v in d.items():
        out[n + 1] = out.get(n + 1, 0.0j) + v / 2j
        out[n - 1] = out.get(n - 1, 0.0j) - v / 2j
    return out


def _dtheta(d):
    return {n: 2j * n * v for n, v in d.items()}


def _add(*ds):
    out = {}
    for d in ds:
        for n, v in d.items():
            out[n] = out.get(n, 0.0j) + v
    return out


def _scale(d, c):
    return {n: c * v for n, v in d.items()}


def lie_operators(par):
    """The three derived operators for the basis H, E+F, E-F as maps on
    coefficient dictionaries {n: a_n} over e_n = exp(2 i n theta)."""
    lam = par.lam

    def op_h(d):
        return _add(_scale(_mult_cos(d), -(lam - 1.0)), _mult_sin(_dtheta(d)))

    def op_epf(d):
        return _add(_scale(_mult_sin(d), -(lam - 1.0)), _scale(_mult_cos(_dtheta(d)), -1.0))

    def op_emf(d):
        return _dtheta(d)

    return op_h, op_epf, op_emf


def _coeff_norm(d):
    return math.sqrt(sum(abs(v) ** 2 for v in d.values()))


def casimir_apply(d, par):
    """-(H^2 + (E+F)^2 + (E-F)^2) applied to a coefficient dictionary."""
    ops = lie_operators(par)
    out = {}
    for op in ops:
        out = _add(out, _scale(op(op(d)), -1.0))
    return out


def casimir_calibration(par):
    """Scalar c with -sum X_i^2 e_n = (mu + 2 n^2) c e_n, calibrated at n = 1."""
    w = casimir_apply({1: 1.0}, par)
    return complex(w.get(1, 0.0j)) / (par.mu + 2.0)


def casimir_check(n, par):
    """Relative error of -sum X_i^2 e_n against (mu + 2 n^2) c e_n."""
    n = int(n)
    c = casimir_calibration(par)
    w = casimir_apply({n: 1.0}, par)
    target = (par.mu + 2.0 * n * n) * c
    resid = dict(w)
    resid[n] = resid.get(n, 0.0j) - target
    return _coeff_norm(resid) / abs(target)


def sobolev_circle_monomial(f, k, par, coeff_floor=1e-14):
    """Lie-monomial Sobolev norm: sum over all words of length <= k in the
    three basis operators of ||X_word f||^2, computed exactly on coefficients."""
    ks, a = f.coeff_array()
    scale = np.abs(a).max()
    d = {int(n): complex(v) for n, v in zip(ks, a) if abs(v) > coeff_floor * scale}
    ops = lie_operators(par)
    total = 0.0
    level = [d]
    total += sum(_coeff_norm(x) ** 2 for x in level)
    for _ in range(int(k)):
        nxt = []
        for x in level:
            for op in ops:
                nxt.append(op(x))
        total += sum(_coeff_norm(x) ** 2 for x in nxt)
        level = nxt
    return math.sqrt(total)


def hann_window_vector():
    """Fixed smooth test bump cos^2(pi x / 4) on [-2, 2] with closed-form
    derivative norms: S_0^2 = 3/2, S_1^2 adds pi^2/8, S_2^2 adds pi^4/32."""

    def fn(x):
        out = np.zeros_like(x, dtype=complex)
        inside = np.abs(x) < 2.0
        out[inside] = np.cos(np.pi * x[inside] / 4.0) ** 2
        return out

    return LineVector(fn, support=(-2.0, 2.0))
