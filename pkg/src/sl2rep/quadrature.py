"""Quadrature helpers: adaptive line integrals and Chebyshev proxies.

Evaluators passed to these helpers take float arrays and return arrays.
"""

from __future__ import annotations

import warnings
from functools import lru_cache

import numpy as np
from scipy import integrate
from scipy.fft import dct

from .errors import TruncationError


@lru_cache(maxsize=256)
def _cc_rule(m):
    """Clenshaw-Curtis nodes/weights on the m+1 Chebyshev extrema of [-1, 1]."""
    k = np.arange(m + 1)
    with np.errstate(divide="ignore"):
        moments = np.where(k % 2 == 0, 2.0 / (1.0 - k.astype(float) ** 2), 0.0)
    w = dct(moments, type=1) / m
    w[0] *= 0.5
    w[-1] *= 0.5
    nodes = np.cos(np.pi * k / m)
    w.setflags(write=False)
    nodes.setflags(write=False)
    return nodes, w


def integrate_line(fn, points=(), support=None, epsabs=1e-12, epsrel=1e-10, limit=400):
    """Integrate a real-valued vectorized function over the line or an interval.

    ``points`` are interior breakpoints (features or integrable singularities).
    """

    def f(x):
        return float(fn(np.array([x], dtype=float))[0])

    with warnings.catch_warnings():
        warnings.simplefilter("ignore", integrate.IntegrationWarning)
        if support is not None:
            lo, hi = float(support[0]), float(support[1])
            inner = sorted({p for p in points if lo < p < hi})
            val, _ = integrate.quad(f, lo, hi, points=inner or None,
                                    epsabs=epsabs, epsrel=epsrel, limit=limit)
            return val
        cut = 4.0 * max([1.0] + [abs(p) for p in points])
        inner = sorted({p for p in points if -cut < p < cut})
        val, _ = integrate.quad(f, -cut, cut, points=inner or None,
                                epsabs=epsabs, epsrel=epsrel, limit=limit)
        hi, _ = integrate.quad(f, cut, np.inf, epsabs=epsabs, epsrel=epsrel, limit=limit)
        lo, _ = integrate.quad(f, -np.inf, -cut, epsabs=epsabs, epsrel=epsrel, limit=limit)
        return val + hi + lo


class ChebProxy:
    """Chebyshev interpolant of a smooth function on [a, b].

    Coefficients come from values at the Chebyshev extrema via a DCT-I, so
    fitting is fast; derivatives are exact derivatives of the interpolant.
    """

    def __init__(self, coef, interval):
        self.coef = np.asarray(coef)
        self.interval = (float(interval[0]), float(interval[1]))

    @classmethod
    def fit(cls, fn, a, b, n0=128, n_max=8192, tol=1e-10, ref_scale=0.0):
        """``ref_scale`` widens the convergence test to absolute accuracy
        ``tol * ref_scale``; callers summing many pieces pass the scale of the
        dominant one so that negligibly small pieces converge immediately."""
        a, b = float(a), float(b)
        n = n0
        while True:
            xs = np.cos(np.pi * np.arange(n + 1) / n)  # 1 .. -1
            vals = fn((b - a) / 2 * xs + (b + a) / 2)
            coef = dct(vals, type=1) / n
            coef[0] /= 2.0
            coef[-1] /= 2.0
            scale = max(np.abs(coef).max(), float(ref_scale))
            if scale == 0.0:
                return cls(coef[:2], (a, b))
            tail = np.abs(coef[-(n // 8):]).max()
            if tail <= tol * scale:
                keep = np.abs(coef) > 1e-17 * scale
                idx = np.nonzero(keep)[0]
                last = int(idx.max()) + 1 if len(idx) else 1
                return cls(coef[:max(last, 2)], (a, b))
            if n >= n_max:
                raise TruncationError(
                    f"Chebyshev fit did not converge on [{a}, {b}] "
                    f"(tail {tail:.2e} vs scale {scale:.2e} at n={n})")
            n *= 2

    def deriv(self, m=1):
        a, b = self.interval
        c = np.polynomial.chebyshev.chebder(self.coef, m=m, scl=2.0 / (b - a))
        if len(c) == 0:
            c = np.zeros(1, dtype=self.coef.dtype)
        return ChebProxy(c, self.interval)

    def __call__(self, x):
        a, b = self.interval
        t = (2.0 * np.asarray(x, dtype=float) - (a + b)) / (b - a)
        return np.polynomial.chebyshev.chebval(t, self.coef)

    def _synth(self, m):
        """Values on the m+1 Chebyshev extrema via a padded DCT-I."""
        if m < len(self.coef) - 1:
            raise ValueError("synthesis grid smaller than the polynomial degree")
        d = np.zeros(m + 1, dtype=complex)
        d[: len(self.coef)] = self.coef
        d[0] *= 2.0
        d[m] *= 2.0
        return 0.5 * dct(d, type=1)

    def l2_norm_sq(self):
        """Integral of |p|^2 over the interval (Clenshaw-Curtis, exact for the proxy)."""
        a, b = self.interval
        n = len(self.coef) - 1
        m = 1 << max(4, (2 * n + 2).bit_length())
        nodes, w = _cc_rule(m)
        v = self._synth(m)
        return (b - a) / 2.0 * float(np.sum(w * (v.real ** 2 + v.imag ** 2)))

    def sup_norm(self, m=2048):
        v = self._synth(max(m, 2 * len(self.coef)))
        return float(np.abs(v).max())
