"""Siegel-domain quantities for the modular lattice: height, horocycle
diameter, the fiber-counting weight, and the one-dimensional mean-value bound.

The lattice is SL(2,Z) with its single cusp at infinity.  The weight counts
integer matrices whose conjugate by the sample point stays inside a fixed
symmetric compact ball; the Frobenius-norm ball makes the count exactly
invariant under the right rotation factor, so only the horocycle and diagonal
Iwasawa coordinates enter.
"""

from __future__ import annotations

import math

import numpy as np

from .algebra import GroupElement, iwasawa
from .errors import DomainError, TruncationError

#: Radius of the symmetric Frobenius ball standing in for the product B B^-1.
BALL_RADIUS = 0.5

DEFAULT_ENTRY_BOUND = 1 << 40


def height(g):
    """Iwasawa height; diag(e, 1/e) has height 1.  Left-unipotent and
    right-rotation invariant."""
    return iwasawa(g)[1]


def in_siegel_domain(g, threshold):
    """Membership in the Siegel domain above the given height."""
    return height(g) > float(threshold)


def horocycle_diameter(g):
    """min(1, hyperbolic diameter of the closed horocycle through the point).

    For the cusp at infinity the closed horocycle at height h sits at
    y = e^{2h} and has diameter 2 asinh(1/(4y))."""
    y = math.exp(2.0 * height(g))
    return min(1.0, 2.0 * math.asinh(1.0 / (4.0 * y)))


def _in_ball(y):
    """Symmetric membership test: both y and y^-1 within BALL_RADIUS of 1."""
    d1 = np.linalg.norm(y - np.eye(2))
    yi = np.array([[y[1, 1], -y[0, 1]], [-y[1, 0], y[0, 0]]])
    d2 = np.linalg.norm(yi - np.eye(2))
    return max(d1, d2) <= BALL_RADIUS


def weight(g, entry_bound=DEFAULT_ENTRY_BOUND):
    """sqrt of the number of gamma in SL(2,Z) with g^-1 gamma g in the ball.

    The enumeration ranges are derived from the ball inequalities, so it is
    exhaustive; a range hitting ``entry_bound`` raises instead of truncating.
    """
    entry_bound = int(entry_bound)
    shift, h, _ = iwasawa(g)
    e2h = math.exp(2.0 * h)
    rho = BALL_RADIUS
    # Y = (n a)^-1 gamma (n a) for gamma = [[p, q], [r, s]]:
    #   Y = [[p - shift r,  (q + shift (p - s) - shift^2 r) / e2h],
    #        [r e2h,        r shift + s]]
    r_max = math.floor(rho / e2h)
    if r_max > entry_bound:
        raise TruncationError("entry bound too small for the unipotent range")
    count = 0
    for r in range(-r_max, r_max + 1):
        if r == 0:
            for diag in (1.0, -1.0):
                base = 2.0 * (diag - 1.0) ** 2
                rem = rho * rho - base
                if rem < 0:
                    continue
                qmax = math.floor(math.sqrt(rem) * e2h)
                if qmax >= entry_bound:
                    raise TruncationError("entry bound too small for the fiber count; "
                                          f"need at least {qmax}")
                count += 2 * qmax + 1
        else:
            p_lo = math.ceil(shift * r + 1.0 - rho)
            p_hi = math.floor(shift * r + 1.0 + rho)
            s_lo = math.ceil(1.0 - rho - r * shift)
            s_hi = math.floor(1.0 + rho - r * shift)
            if max(abs(p_lo), abs(p_hi), abs(s_lo), abs(s_hi)) > entry_bound:
                raise TruncationError("entry bound too small for the diagonal range")
            for p in range(p_lo, p_hi + 1):
                for s in range(s_lo, s_hi + 1):
                    num = p * s - 1
                    if num % r != 0:
                        continue
                    q = num // r
                    if abs(q) > entry_bound:
                        raise TruncationError("entry bound too small for the "
                                              "off-diagonal entry")
                    y = np.array([
                        [p - shift * r, (q + shift * (p - s) - shift * shift * r) / e2h],
                        [r * e2h, r * shift + s],
                    ])
                    if _in_ball(y):
                        count += 1
    return math.sqrt(count)


def siegel_samples(rng, n, h_range=(1.0, 10.0)):
    """Seeded sample points n(x) a(h) k(t) with heights in the given range."""
    out = []
    for _ in range(n):
        x = rng.uniform(-0.5, 0.5)
        h = rng.uniform(*h_range)
        t = rng.uniform(0.0, 2.0 * math.pi)
        out.append(GroupElement.from_iwasawa(x, h, t))
    return out


def dw_bounded_scan(samples, entry_bound=DEFAULT_ENTRY_BOUND):
    """Evaluate d * w over the samples.

    Returns (max product, rows, slope) where rows are (h, d, w, d*w) and
    slope is the regression slope of ln(d*w) against h.
    """
    rows = []
    for g in samples:
        h = height(g)
        d = horocycle_diameter(g)
        w = weight(g, entry_bound=entry_bound)
        rows.append((h, d, w, d * w))
    if not rows:
        raise DomainError("need at least one sample")
    hs = np.array([r[0] for r in rows])
    prods = np.array([r[3] for r in rows])
    slope = float(np.polyfit(hs, np.log(prods), 1)[0]) if len(rows) >= 2 else math.nan
    return float(prods.max()), rows, slope


def mean_value_bound(fn, period, n=8192):
    """For a real zero-mean periodic function, verify the one-dimensional
    mean-value bound sup |f| <= (period/2) sup |f'|.

    Returns (sup |f|, bound); the derivative is spectral, so smooth inputs
    are differentiated to near machine precision.
    """
    period = float(period)
    xs = np.arange(n) * (period / n)
    v = np.asarray(fn(xs))
    if np.iscomplexobj(v) and np.abs(v.imag).max() > 1e-12 * (np.abs(v).max() + 1.0):
        raise DomainError("mean-value bound applies to real functions")
    v = v.real.astype(float)
    sup = float(np.abs(v).max())
    if abs(v.mean()) > 1e-9 * (sup + 1.0):
        raise DomainError("function must have zero mean over the period")
    freqs = np.fft.fftfreq(n, d=period / n) * 2.0 * math.pi
    dv = np.fft.ifft(np.fft.fft(v) * 1j * freqs).real
    bound = 0.5 * period * float(np.abs(dv).max())
    return sup, bound
