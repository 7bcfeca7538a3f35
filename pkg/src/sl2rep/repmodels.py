"""Circle and line realizations of the spherical principal/complementary series.

A vector is a smooth even-homogeneous function of degree ``lam - 1`` on the
punctured plane.  Restriction to the unit circle gives the circle model with
basis ``e_k(theta) = exp(2 i k theta)``; restriction to the horizontal line
``y = 1`` gives the line model ``u(x) = v(x, 1)``.
"""

from __future__ import annotations

import dataclasses
import warnings

import numpy as np

from .errors import DomainError, TruncationError

DEFAULT_GRID = 4096
MAX_GRID = 1 << 17
_AXIS_PROBE = 1e9


@dataclasses.dataclass(frozen=True)
class SpectralParameter:
    """lam with its series tag; the Casimir eigenvalue is mu = (1 - lam^2)/4."""

    lam: complex
    series: str

    def __post_init__(self):
        lam = complex(self.lam)
        if self.series == "principal":
            if abs(lam.real) > 1e-12:
                raise DomainError("principal series requires lam on the imaginary axis")
        elif self.series == "complementary":
            if abs(lam.imag) > 1e-12 or not -1.0 < lam.real < 0.0:
                raise DomainError("complementary series requires real lam in (-1, 0)")
        else:
            raise DomainError(f"unknown series tag {self.series!r}")
        object.__setattr__(self, "lam", lam)

    @classmethod
    def principal(cls, t):
        return cls(1j * float(t), "principal")

    @classmethod
    def complementary(cls, lam):
        return cls(complex(float(lam)), "complementary")

    @property
    def mu(self):
        return float(((1.0 - self.lam * self.lam) / 4.0).real)

    @property
    def t(self):
        """Imaginary part of lam (the frequency for the principal series)."""
        return float(self.lam.imag)


class CircleVector:
    """Samples on a uniform grid over [0, 2pi) with cached Fourier data.

    The mode of index k is exp(2 i k theta); valid vectors satisfy
    f(theta + pi) = f(theta), i.e. only even DFT modes carry mass.
    """

    __slots__ = ("values", "_dft")

    def __init__(self, values):
        v = np.asarray(values, dtype=complex)
        if v.ndim != 1 or len(v) < 8 or len(v) % 4 != 0:
            raise DomainError("need a 1-d sample array with length a multiple of 4, >= 8")
        v = v.copy()
        v.setflags(write=False)
        object.__setattr__(self, "values", v)
        object.__setattr__(self, "_dft", None)

    def __setattr__(self, name, value):
        raise AttributeError("circle vectors are immutable")

    @property
    def size(self):
        return len(self.values)

    def thetas(self):
        return np.arange(self.size) * (2.0 * np.pi / self.size)

    def dft(self):
        """Full DFT coefficients c_m indexed by m in [-N/2, N/2)."""
        if self._dft is None:
            # idempotent cache of a pure derived value; safe to race
            c = np.fft.fftshift(np.fft.fft(self.values) / self.size)
            c.setflags(write=False)
            object.__setattr__(self, "_dft", c)
        return self._dft

    def coeff(self, k):
        """Coefficient of exp(2 i k theta)."""
        c = self.dft()
        i = 2 * int(k) + self.size // 2
        return complex(c[i]) if 0 <= i < self.size else 0.0j

    def coeff_array(self):
        """(ks, a_k) for all resolved even modes, k in [-N/4, N/4)."""
        c = self.dft()
        n = self.size
        ks = np.arange(-(n // 4), n // 4)
        return ks, c[2 * ks + n // 2]

    def odd_mode_mass(self):
        c = self.dft()
        return float(np.abs(c[1::2]).max()) if self.size > 1 else 0.0

    def parseval_defect(self):
        """|mean |f|^2 - sum |a_k|^2| = mass in the odd modes."""
        c = self.dft()
        return float(np.sum(np.abs(c[1::2]) ** 2))

    def spectral_tail(self):
        """Relative size of the top half-band of the spectrum."""
        c = np.abs(self.dft())
        scale = c.max()
        if scale == 0.0:
            return 0.0
        n = self.size
        band = np.concatenate([c[: n // 4], c[-(n // 4):]])
        return float(band.max() / scale)

    def evaluate(self, theta):
        """Trigonometric interpolation at arbitrary angles (Horner in e^{i theta})."""
        theta = np.asarray(theta, dtype=float)
        c = self.dft()
        n = self.size
        scale = np.abs(c).max()
        if scale == 0.0:
            return np.zeros_like(theta, dtype=complex)
        live = np.nonzero(np.abs(c) > 1e-17 * scale)[0]
        lo, hi = live[0], live[-1]
        w = np.exp(1j * theta)
        acc = np.zeros_like(w)
        for ck in c[lo:hi + 1][::-1]:
            acc = acc * w + ck
        m_lo = lo - n // 2
        return acc * np.exp(1j * m_lo * theta)

    @classmethod
    def from_function(cls, fn, n0=DEFAULT_GRID, tol=1e-10, n_max=MAX_GRID):
        """Sample a function, doubling the grid until the spectral tail is resolved."""
        n = max(16, int(n0))
        while True:
            vec = cls(fn(np.arange(n) * (2.0 * np.pi / n)))
            if vec.spectral_tail() <= tol:
                return vec
            if n >= n_max:
                warnings.warn(f"circle grid capped at {n} with spectral tail "
                              f"{vec.spectral_tail():.2e}")
                return vec
            n *= 2

    @classmethod
    def from_coeffs(cls, coeffs, n=None):
        """Exact synthesis from a mapping k -> a_k."""
        kmax = max((abs(int(k)) for k in coeffs), default=0)
        need = max(16, 4 * (kmax + 1))
        if n is None:
            n = 1 << (need - 1).bit_length()
        spec = np.zeros(n, dtype=complex)
        for k, a in coeffs.items():
            spec[(2 * int(k)) % n] = a
        return cls(np.fft.ifft(spec) * n)

    @classmethod
    def basis(cls, k, n=None):
        return cls.from_coeffs({int(k): 1.0}, n=n)


def act_circle(g, f, par, n0=None, tol=1e-10):
    """Circle-model action: (pi(g) f)(theta) = r^(lam-1) f(theta') where
    g^{-1} (cos theta, sin theta) = r (cos theta', sin theta')."""
    if not g.is_real:
        raise DomainError("the circle action is implemented for real elements")
    gi = g.inv().mat.real
    lam = par.lam

    def fn(theta):
        c, s = np.cos(theta), np.sin(theta)
        wx = gi[0, 0] * c + gi[0, 1] * s
        wy = gi[1, 0] * c + gi[1, 1] * s
        r = np.hypot(wx, wy)
        return np.exp((lam - 1.0) * np.log(r)) * f.evaluate(np.arctan2(wy, wx))

    return CircleVector.from_function(fn, n0=n0 or max(f.size, 1024), tol=tol)


class LineVector:
    """Line-model vector: a vectorized evaluator plus quadrature metadata.

    ``quad_points`` are breakpoints for adaptive integration (poles of the
    evaluator and sharp features); ``support`` restricts integrals when set;
    ``feature_scale`` is the width of the finest feature (defaults to 1).
    """

    __slots__ = ("evaluator", "quad_points", "support", "par", "axis_value",
                 "feature_scale", "derivative_factory")

    def __init__(self, evaluator, quad_points=(), support=None, par=None,
                 axis_value=None, feature_scale=1.0, derivative_factory=None):
        object.__setattr__(self, "evaluator", evaluator)
        object.__setattr__(self, "quad_points", tuple(float(p) for p in quad_points))
        object.__setattr__(self, "support",
                           None if support is None else (float(support[0]), float(support[1])))
        object.__setattr__(self, "par", par)
        object.__setattr__(self, "axis_value", axis_value)
        object.__setattr__(self, "feature_scale", float(feature_scale))
        object.__setattr__(self, "derivative_factory", derivative_factory)

    def __setattr__(self, name, value):
        raise AttributeError("line vectors are immutable")

    def __call__(self, x):
        arr = np.atleast_1d(np.asarray(x, dtype=float))
        out = np.asarray(self.evaluator(arr), dtype=complex)
        return out if np.ndim(x) else out[0]

    def axis_limit(self, par=None):
        """Value of the homogeneous extension on the x-axis directions,
        lim |s|^(1-lam) u(s); both directions agree for even vectors."""
        if self.axis_value is not None:
            return complex(self.axis_value)
        if self.support is not None:
            return 0.0j
        par = par or self.par
        if par is None:
            raise DomainError("axis limit needs a spectral parameter")
        s = _AXIS_PROBE
        amp = np.exp((1.0 - par.lam) * np.log(s))
        return complex(0.5 * amp * (self(s) + self(-s)))

    def with_mask(self, mask, support=None, extra_points=()):
        """Pointwise product with a real mask callable."""
        ev = self.evaluator

        def fn(x):
            return ev(x) * mask(x)

        return LineVector(fn, quad_points=self.quad_points + tuple(extra_points),
                          support=support if support is not None else self.support,
                          par=self.par, feature_scale=self.feature_scale)


def dilate(u, t):
    """(h_t u)(x) = u(x / t) for t > 0."""
    t = float(t)
    if t <= 0:
        raise DomainError("dilation parameter must be positive")
    ev = u.evaluator

    def fn(x):
        return ev(x / t)

    # the axis limit lim |s|^(1-lam) u(s/t) picks up a factor t^(1-lam)
    axis = None
    if u.axis_value is not None and u.par is not None:
        axis = complex(u.axis_value) * t ** (1.0 - u.par.lam)
    return LineVector(fn,
                      quad_points=tuple(p * t for p in u.quad_points),
                      support=None if u.support is None else (u.support[0] * t, u.support[1] * t),
                      par=u.par, axis_value=axis,
                      feature_scale=u.feature_scale * t)


def act_line(g, u, par):
    """Line-model action of a real element g = [[a,b],[c,d]]:

    (pi(g) u)(x) = |a - c x|^(lam-1) u((d x - b)/(a - c x)).
    """
    if not g.is_real:
        raise DomainError("the line action is implemented for real elements")
    a, b, c, d = (float(v.real) for v in g.entries())
    lam = par.lam

    def fn(x):
        den = a - c * x
        num = d * x - b
        out = np.empty(x.shape, dtype=complex)
        sing = np.abs(den) <= 1e-13 * (1.0 + np.abs(num))
        reg = ~sing
        out[reg] = np.exp((lam - 1.0) * np.log(np.abs(den[reg]))) * u(num[reg] / den[reg])
        if sing.any():
            lim = u.axis_limit(par)
            out[sing] = lim * np.exp((lam - 1.0) * np.log(np.abs(num[sing])))
        return out

    points = []
    if c != 0.0:
        points.append(a / c)
    for p in u.quad_points:
        den = c * p + d
        if den != 0.0:
            points.append((a * p + b) / den)
    support = None
    if u.support is not None:
        lo, hi = u.support
        den_lo, den_hi = c * lo + d, c * hi + d
        if c == 0.0 or (den_lo * den_hi > 0):
            ims = sorted(((a * lo + b) / den_lo, (a * hi + b) / den_hi))
            support = (ims[0], ims[1])
    return LineVector(fn, quad_points=points, support=support, par=par,
                      feature_scale=u.feature_scale)


def line_to_circle(u, par, n0=DEFAULT_GRID, tol=1e-10):
    """f(theta) = |sin theta|^(lam-1) u(cot theta), with the homogeneity limit
    supplying the values on the x-axis directions."""
    lam = par.lam

    def fn(theta):
        st = np.sin(theta)
        ct = np.cos(theta)
        out = np.empty(theta.shape, dtype=complex)
        ax = st == 0.0
        reg = ~ax
        out[reg] = np.exp((lam - 1.0) * np.log(np.abs(st[reg]))) * u(ct[reg] / st[reg])
        if ax.any():
            out[ax] = u.axis_limit(par)
        return out

    return CircleVector.from_function(fn, n0=n0, tol=tol)


def circle_to_line(f, par):
    """u(x) = (1 + x^2)^((lam-1)/2) f(arccot x)."""
    half = (par.lam - 1.0) / 2.0

    def fn(x):
        theta = np.arctan2(1.0, x)
        return np.exp(half * np.log1p(x * x)) * f.evaluate(theta)

    return LineVector(fn, par=par, axis_value=f.evaluate(np.array([0.0]))[0])


def fourier_coeffs(f, kmax):
    """Coefficients a_k = <f, e_k> for |k| <= kmax from the sample grid.

    Requires at least 4*kmax samples; warns when the edge coefficients are
    not negligible (aliasing risk).
    """
    kmax = int(kmax)
    if f.size < 4 * kmax:
        raise DomainError(f"need at least {4 * kmax} samples, have {f.size}")
    out = {k: f.coeff(k) for k in range(-kmax, kmax + 1)}
    scale = max(abs(v) for v in out.values())
    if scale > 0 and max(abs(out[kmax]), abs(out[-kmax])) > 1e-6 * scale:
        warnings.warn("edge Fourier coefficients are not negligible; "
                      "increase kmax or the sample grid")
    return out


def require_resolved(f, tol=1e-10):
    """Raise when the sample grid does not resolve the vector's spectrum."""
    tail = f.spectral_tail()
    if tail > tol:
        raise TruncationError(f"spectral tail {tail:.2e} exceeds {tol:.1e}")
