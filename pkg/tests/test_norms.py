import math

import numpy as np
import pytest

from sl2rep import (CircleVector, LineVector, SpectralParameter,
                    act_circle, casimir_calibration, casimir_check, circle_to_line,
                    complementary_norm, dilate, l2_circle, l2_line,
                    sobolev_circle_monomial, sobolev_fourier, sobolev_line)
from sl2rep.algebra import ad_norm, random_element
from sl2rep.continuation import line_restriction
from sl2rep.errors import DomainError, TruncationError
from sl2rep.norms import hann_window_vector

PAR = SpectralParameter.principal(1.0)
COMP = SpectralParameter.complementary(-0.5)


def test_l2_circle_basis():
    assert l2_circle(CircleVector.basis(0)) == pytest.approx(1.0)
    e0 = CircleVector.basis(0, n=64)
    e1 = CircleVector.basis(1, n=64)
    assert l2_circle(CircleVector(e0.values + e1.values)) == pytest.approx(math.sqrt(2))


def test_l2_line_examples():
    u = circle_to_line(CircleVector.basis(0), PAR)
    assert l2_line(u) == pytest.approx(1.0, abs=1e-9)
    zero = LineVector(lambda x: np.zeros_like(x, dtype=complex), support=(-1.0, 1.0))
    assert l2_line(zero) == 0.0


def test_l2_line_scaling():
    u = line_restriction(0.2, PAR)
    base = l2_line(u)
    assert l2_line(dilate(u, 2.0)) == pytest.approx(math.sqrt(2.0) * base, rel=1e-8)


def test_l2_line_rejects_complementary():
    u = line_restriction(0.2, COMP)
    with pytest.raises(DomainError):
        l2_line(u)


def test_complementary_norm_zero_and_positive(rng):
    zero = LineVector(lambda x: np.zeros_like(x, dtype=complex), support=(-1.0, 1.0))
    assert complementary_norm(zero, COMP) == 0.0
    from sl2rep.cutoffs import unit_bump

    for _ in range(100):
        coefs = rng.normal(size=4) + 1j * rng.normal(size=4)

        def fn(x, c=coefs):
            poly = sum(ck * np.cos((k + 1) * x) for k, ck in enumerate(c))
            return unit_bump(x / 2.0) * poly

        v = LineVector(fn, support=(-2.0, 2.0))
        assert complementary_norm(v, COMP) > 1e-6


def test_complementary_norm_gaussian_oracle():
    # closed form for the Gaussian: sqrt(2 pi) 2^(-lam-1/2) Gamma(-lam/2)
    for lam in (-0.9, -0.5, -0.1):
        par = SpectralParameter.complementary(lam)
        g = LineVector(lambda x: np.exp(-x * x / 2.0) + 0j)
        exact = math.sqrt(2 * math.pi) * 2.0 ** (-lam - 0.5) * math.gamma(-lam / 2.0)
        assert complementary_norm(g, par) ** 2 == pytest.approx(exact, rel=3e-8)


def test_complementary_norm_dilation_covariance():
    u = line_restriction(0.05, COMP)
    base = complementary_norm(u, COMP) ** 2
    scaled = complementary_norm(dilate(u, 2.0), COMP) ** 2
    assert scaled / base == pytest.approx(2.0 ** 1.5, rel=1e-4)


def test_complementary_norm_log_law():
    vals = {}
    for k in (4, 8, 12, 16):
        eps = 2.0 ** -k
        vals[k] = complementary_norm(line_restriction(eps, COMP), COMP) ** 2
    ratios = [vals[k] / (k * math.log(2)) for k in vals]
    assert max(ratios) / min(ratios) <= 3.0


def test_sobolev_fourier_examples():
    par = SpectralParameter.principal(2.0)
    mu = par.mu
    assert sobolev_fourier(CircleVector.basis(0), 1.0, par) == pytest.approx(
        math.sqrt(1 + mu))
    for n in (1, 5):
        assert sobolev_fourier(CircleVector.basis(n), 2.0, par) == pytest.approx(
            (1 + mu + 2 * n * n) ** 1.0)
    vec = CircleVector.from_function(lambda th: np.exp(2j * th) - 0.3)
    assert sobolev_fourier(vec, 0.0, par) == pytest.approx(l2_circle(vec))


def test_sobolev_fourier_truncation_guard():
    e_edge = CircleVector.basis(3, n=16)
    with pytest.raises(TruncationError):
        sobolev_fourier(e_edge, 1.0, PAR)


def test_sobolev_line_closed_form_bump():
    hw = hann_window_vector()
    assert sobolev_line(hw, 0) == pytest.approx(math.sqrt(1.5), rel=1e-9)
    assert sobolev_line(hw, 1) == pytest.approx(math.sqrt(1.5 + math.pi ** 2 / 8),
                                                rel=1e-9)
    assert sobolev_line(hw, 2) == pytest.approx(
        math.sqrt(1.5 + math.pi ** 2 / 8 + math.pi ** 4 / 32), rel=1e-8)


def test_sobolev_line_analytic_factory():
    # Gaussian with supplied derivatives; matches the Chebyshev route
    def factory(j):
        if j == 0:
            return lambda x: np.exp(-x * x) + 0j
        if j == 1:
            return lambda x: -2 * x * np.exp(-x * x) + 0j
        return lambda x: (4 * x * x - 2) * np.exp(-x * x) + 0j

    ua = LineVector(lambda x: np.exp(-x * x) + 0j, support=(-8.0, 8.0),
                    derivative_factory=factory)
    ub = LineVector(lambda x: np.exp(-x * x) + 0j, support=(-8.0, 8.0))
    assert sobolev_line(ua, 2) == pytest.approx(sobolev_line(ub, 2), rel=1e-8)


def test_sobolev_line_fd_fallback():
    u = LineVector(lambda x: np.exp(-x * x) + 0j)
    ref = LineVector(lambda x: np.exp(-x * x) + 0j, support=(-8.0, 8.0))
    assert sobolev_line(u, 1) == pytest.approx(sobolev_line(ref, 1), rel=1e-5)


def test_model_comparability_on_window(rng):
    # same vector measured in both Sobolev flavors stays within a fitted band
    from sl2rep.cutoffs import unit_bump
    from sl2rep.repmodels import line_to_circle

    ratios = []
    for _ in range(50):
        coefs = rng.normal(size=3)

        def fn(x, c=coefs):
            poly = sum(ck * np.cos((k + 1) * 1.3 * x) for k, ck in enumerate(c))
            return unit_bump(x / 2.0) * poly + 0j

        u = LineVector(fn, support=(-2.0, 2.0), par=PAR)
        line_val = sobolev_line(u, 2)
        circ_val = sobolev_fourier(line_to_circle(u, PAR), 2, PAR)
        ratios.append(line_val / circ_val)
    c1, c2 = min(ratios), max(ratios)
    assert 0 < c1 <= c2 < math.inf
    assert c2 / c1 < 100.0


def test_casimir_calibration_and_checks():
    for par in (SpectralParameter.principal(0.0), SpectralParameter.principal(2.0)):
        c = casimir_calibration(par)
        assert c.real == pytest.approx(4.0, abs=1e-9)
        assert abs(c.imag) <= 1e-12
        assert casimir_check(1, par) <= 1e-12
        assert casimir_check(0, par) <= 1e-10
        assert casimir_check(32, par) <= 1e-8
        assert casimir_check(-17, par) <= 1e-8


def test_sobolev_continuity_under_action(rng):
    # S_k(pi(g) v) <= ||g||_ad^k S_k(v) for the monomial flavor
    par = SpectralParameter.principal(1.0)
    vec = CircleVector.from_coeffs({0: 1.0, 1: 0.5, -2: 0.25j})
    k = 2
    base = sobolev_circle_monomial(vec, k, par)
    for _ in range(10):
        g = random_element(rng, scale=0.7)
        moved = act_circle(g, vec, par)
        lhs = sobolev_circle_monomial(moved, k, par)
        assert lhs <= ad_norm(g) ** k * base * (1.0 + 1e-6)


def test_l2_invariance_under_action(rng):
    vec = CircleVector.from_coeffs({0: 1.0, 2: 0.3})
    for _ in range(10):
        g = random_element(rng, scale=0.8)
        assert l2_circle(act_circle(g, vec, PAR)) == pytest.approx(l2_circle(vec),
                                                                   abs=1e-6)


def test_l2_line_invariance_under_action(rng):
    from sl2rep.repmodels import act_line, circle_to_line

    u = circle_to_line(CircleVector.from_coeffs({0: 1.0, 1: 0.4j}), PAR)
    base = l2_line(u)
    for _ in range(5):
        g = random_element(rng, scale=0.8)
        assert l2_line(act_line(g, u, PAR)) == pytest.approx(base, abs=1e-6)


def test_complementary_invariance_under_action():
    # the pairing form is the invariant product: acting by real elements
    # must preserve the norm (joint check of the norm and the line action)
    from sl2rep.algebra import GroupElement
    from sl2rep.cutoffs import unit_bump
    from sl2rep.repmodels import act_line

    def fn(x):
        return unit_bump(x) * np.exp(2j * x) + 0j

    u = LineVector(fn, support=(-1.0, 1.0), par=COMP)
    base = complementary_norm(u, COMP)
    elements = [GroupElement.translation(0.7),
                GroupElement([[1.3, 0.0], [0.0, 1.0 / 1.3]]),
                GroupElement.from_iwasawa(0.3, -0.2, 0.9)]
    for g in elements:
        moved = act_line(g, u, COMP)
        assert complementary_norm(moved, COMP) == pytest.approx(base, rel=1e-5)
