"""Norm sweeps over the boundary family and synthetic-spectrum bookkeeping.

For the principal series the squared norm of the boundary vector is

    ||v_eps||^2 = (1/pi) int m(x)^-1 exp(-t * arg q_eps(x)) dx,

computed in the log domain (peak-shifted) so arbitrarily large t is safe.
The synthetic spectra follow a quadratic counting law with a configurable
power-law profile for the normalized coefficients.
"""

from __future__ import annotations

import dataclasses
import math

import numpy as np

from .continuation import boundary_argument, boundary_modulus, line_restriction
from .errors import DomainError
from .norms import complementary_norm
from .quadrature import integrate_line

_HALF_PI = math.pi / 2.0


@dataclasses.dataclass(frozen=True)
class SpectrumEntry:
    """One synthetic or ingested spectral line: frequency and coefficient."""

    lam: float
    coeff: complex

    def __post_init__(self):
        if self.lam < 0:
            raise DomainError("spectral frequency must be >= 0")

    @property
    def b(self):
        """Normalized square |c|^2 exp(pi lam / 2)."""
        return abs(self.coeff) ** 2 * math.exp(_HALF_PI * self.lam)


def b_normalize(entry):
    """The normalized square of one entry (kept as a free function for sweeps)."""
    return entry.b


def log_norm_sq_principal(t, eps, epsrel=1e-11):
    """log ||v_eps||^2 for lam = i t, overflow-safe for any t >= 0."""
    t = abs(float(t))
    eps = float(eps)
    if not 0.0 < eps <= 1.0:
        raise DomainError("eps must lie in (0, 1]")
    m = boundary_modulus(eps)
    arg = boundary_argument(eps)
    shift = t * (_HALF_PI - 2.0 * math.atan(eps))  # = -t * min(arg)

    def f(x):
        return np.exp(-t * arg(x) - shift) / m(x)

    pts = (-1.0 / eps, -1.0, -eps, 0.0, eps, 1.0, 1.0 / eps)
    val = integrate_line(f, points=pts, epsabs=0.0, epsrel=epsrel)
    return shift + math.log(val / math.pi)


@dataclasses.dataclass(frozen=True)
class SweepRow:
    eps: float
    log_norm_sq: float
    norm_sq: float  # inf when it would overflow
    ok: bool


def norm_sweep(par, eps_grid):
    """Rows (eps, norm^2) over the grid plus a regression against ln(1/eps).

    Principal parameters use the log-domain line integral; complementary
    parameters use the pairing norm.  Returns (rows, diagnostics).
    """
    from .errors import Sl2RepError

    rows = []
    for eps in eps_grid:
        try:
            if par.series == "principal":
                ln = log_norm_sq_principal(par.t, eps)
            else:
                val = complementary_norm(line_restriction(eps, par), par)
                ln = 2.0 * math.log(val)
            n2 = math.exp(ln) if ln < 700 else math.inf
            rows.append(SweepRow(float(eps), ln, n2, True))
        except (Sl2RepError, ArithmeticError):
            rows.append(SweepRow(float(eps), math.nan, math.nan, False))
    good = [r for r in rows if r.ok and math.isfinite(r.norm_sq)]
    diag = {"slope": math.nan, "intercept": math.nan, "r_squared": math.nan}
    if len(good) >= 3:
        x = np.array([math.log(1.0 / r.eps) for r in good])
        y = np.array([r.norm_sq for r in good])
        a = np.vstack([x, np.ones_like(x)]).T
        coef, *_ = np.linalg.lstsq(a, y, rcond=None)
        resid = y - a @ coef
        ss_tot = float(np.sum((y - y.mean()) ** 2))
        diag = {
            "slope": float(coef[0]),
            "intercept": float(coef[1]),
            "r_squared": 1.0 - float(np.sum(resid ** 2)) / ss_tot if ss_tot > 0 else 1.0,
        }
    return rows, diag


@dataclasses.dataclass(frozen=True)
class LowerBoundRow:
    t: float
    eps: float
    log_lhs: float
    log_rhs: float
    margin: float


def lower_bound_check(par, eps):
    """Compare log ||v_eps||^2 with the reference exponent (pi/2 - 6 eps) t.

    Valid for the principal series with 0 < eps <= 0.1; the margin must be
    bounded below by a single constant over any (t, eps) grid.
    """
    if par.series != "principal":
        raise DomainError("the exponential lower bound concerns the principal series")
    eps = float(eps)
    if not 0.0 < eps <= 0.1:
        raise DomainError("the reference exponent is used for eps <= 0.1")
    t = abs(par.t)
    lhs = log_norm_sq_principal(t, eps)
    rhs = (_HALF_PI - 6.0 * eps) * t
    return LowerBoundRow(t, eps, lhs, rhs, lhs - rhs)


def fit_growth_slope(ts, eps):
    """Least-squares slope of log ||v_eps||^2 against t over the given t grid."""
    ts = np.asarray(list(ts), dtype=float)
    ys = np.array([log_norm_sq_principal(t, eps) for t in ts])
    return float(np.polyfit(ts, ys, 1)[0])


def majorant_integral(eps):
    """Closed form of the three-zone majorant of m^-1: 4 + 4 ln(1/eps).

    Valid pointwise for eps <= 0.4 (zones |x| <= eps, eps <= |x| <= 1/eps,
    |x| > 1/eps with bounds 1/eps, 1/|x|, 1/(eps x^2))."""
    eps = float(eps)
    if not 0.0 < eps <= 0.4:
        raise DomainError("majorant zones require eps <= 0.4")
    return 4.0 + 4.0 * math.log(1.0 / eps)


# ---------------------------------------------------------------------------
# synthetic spectra and the propagation ledger


def weyl_spectrum(t_max, density, seed=0, b_power=-2.0, b_scale=1.0):
    """Deterministic synthetic spectrum with counting function ~ density T^2.

    The normalized squares follow b ~ b_scale * max(lam,1)^b_power; the raw
    coefficients are recovered so that each entry satisfies the exponential
    normalization exactly.
    """
    t_max = float(t_max)
    if density <= 0:
        raise DomainError("density must be positive")
    if t_max > 350.0:
        raise DomainError("frequencies above 350 would underflow the raw coefficients")
    n = int(round(density * t_max * t_max))
    rng = np.random.default_rng(seed)
    lams = t_max * np.sqrt(np.sort(rng.random(n)))
    phases = rng.uniform(0.0, 2.0 * math.pi, n)
    entries = []
    for lam, phase in zip(lams, phases):
        b = b_scale * max(lam, 1.0) ** b_power
        c = math.sqrt(b * math.exp(-_HALF_PI * lam)) * complex(math.cos(phase), math.sin(phase))
        entries.append(SpectrumEntry(float(lam), c))
    return entries


def damped_sum(entries, eps):
    """sum b_i exp(-6 eps lam_i)."""
    return float(sum(e.b * math.exp(-6.0 * eps * e.lam) for e in entries))


def premise_constant(entries, eps_list):
    """Measured A with sum b_i exp(-6 eps lam_i) <= A |ln eps|^3 on the grid."""
    vals = [damped_sum(entries, eps) / abs(math.log(eps)) ** 3 for eps in eps_list]
    return max(vals)


def partial_sum(entries, threshold):
    """sum of b_i over lam_i <= threshold."""
    return float(sum(e.b for e in entries if e.lam <= threshold))


def propagate(premise, threshold):
    """Partial-sum bound e^6 A (ln T)^3 implied by the damped-sum premise."""
    threshold = float(threshold)
    if threshold < math.e:
        raise DomainError("threshold must be at least e")
    if premise <= 0:
        raise DomainError("premise constant must be positive")
    return math.exp(6.0) * premise * math.log(threshold) ** 3


def parseval_rhs(entries, eps, c_fit=None):
    """Termwise bookkeeping of sum |c_i|^2 ||v_eps(lam_i)||^2.

    Returns a dict with the log of the total, the damped minorant
    c_fit * sum b_i exp(-6 eps lam_i) (c_fit measured from the same rows when
    not supplied), and the guaranteed inequality minorant <= rhs.
    """
    entries = [e for e in entries if e.coeff != 0]
    if not entries:
        return {"log_rhs": -math.inf, "log_minorant": -math.inf, "c_fit": 0.0, "ok": True}
    eps = float(eps)
    lns = {}
    for e in entries:
        if e.lam not in lns:
            lns[e.lam] = log_norm_sq_principal(e.lam, eps)
    log_terms = [2.0 * math.log(abs(e.coeff)) + lns[e.lam] for e in entries]
    mx = max(log_terms)
    log_rhs = mx + math.log(sum(math.exp(v - mx) for v in log_terms))
    if c_fit is None:
        margins = [lns[e.lam] - (_HALF_PI - 6.0 * eps) * e.lam for e in entries]
        c_fit = math.exp(min(margins))
    log_minorant = math.log(c_fit) + math.log(damped_sum(entries, eps))
    return {
        "log_rhs": log_rhs,
        "log_minorant": log_minorant,
        "c_fit": c_fit,
        "ok": log_minorant <= log_rhs + 1e-9,
    }
