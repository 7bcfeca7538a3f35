"""Smooth compactly supported cutoffs built from exp(-1/x) mollifiers."""

from __future__ import annotations

import numpy as np


def _phi(y):
    """exp(-1/y) for y > 0, zero otherwise; vectorized."""
    y = np.asarray(y, dtype=float)
    out = np.zeros_like(y)
    pos = y > 0
    out[pos] = np.exp(-1.0 / y[pos])
    return out


def _phi_prime(y):
    y = np.asarray(y, dtype=float)
    out = np.zeros_like(y)
    pos = y > 0
    out[pos] = np.exp(-1.0 / y[pos]) / (y[pos] * y[pos])
    return out


def smoothstep(y):
    """C-infinity transition: 0 for y <= 0, 1 for y >= 1."""
    a = _phi(y)
    b = _phi(1.0 - np.asarray(y, dtype=float))
    return a / (a + b)


def smoothstep_prime(y):
    y = np.asarray(y, dtype=float)
    a, b = _phi(y), _phi(1.0 - y)
    ap, bp = _phi_prime(y), -_phi_prime(1.0 - y)
    den = (a + b) ** 2
    out = np.zeros_like(y)
    ok = den > 0
    out[ok] = (ap[ok] * b[ok] - a[ok] * bp[ok]) / den[ok]
    return out


class PlateauBump:
    """Even C-infinity bump: 1 on [-inner, inner], supported on [-outer, outer]."""

    def __init__(self, inner, outer):
        if not 0 < inner < outer:
            raise ValueError("need 0 < inner < outer")
        self.inner = float(inner)
        self.outer = float(outer)
        self._w = self.outer - self.inner

    def __call__(self, x):
        x = np.asarray(x, dtype=float)
        return smoothstep((self.outer - np.abs(x)) / self._w)

    def deriv(self, x):
        x = np.asarray(x, dtype=float)
        return smoothstep_prime((self.outer - np.abs(x)) / self._w) * (-np.sign(x) / self._w)


#: Cutoff used by the dyadic decomposition: 1 on [-1,1], supported on [-2,2].
unit_annulus_cutoff = PlateauBump(1.0, 2.0)


def annulus_kernel(x):
    """-x * gamma'(x); supported on 1 <= |x| <= 2."""
    x = np.asarray(x, dtype=float)
    return -x * unit_annulus_cutoff.deriv(x)


#: Truncation bump used by the partition of unity: 1 on [-1/2,1/2], supported on [-1,1].
unit_bump = PlateauBump(0.5, 1.0)
