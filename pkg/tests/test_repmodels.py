import math

import numpy as np
import pytest

from sl2rep import (CircleVector, GroupElement, SpectralParameter,
                    act_circle, act_line, circle_to_line, compose, dilate,
                    fourier_coeffs, l2_circle, line_to_circle)
from sl2rep.algebra import random_element
from sl2rep.continuation import line_restriction
from sl2rep.errors import DomainError

PAR = SpectralParameter.principal(1.0)


def test_spectral_parameter_validation():
    assert SpectralParameter.principal(2.0).mu == pytest.approx(5.0 / 4.0)
    assert SpectralParameter.complementary(-0.5).mu == pytest.approx(3.0 / 16.0)
    with pytest.raises(DomainError):
        SpectralParameter(0.5j, "nope")
    with pytest.raises(DomainError):
        SpectralParameter.complementary(0.5)
    with pytest.raises(DomainError):
        SpectralParameter(0.3 + 1j, "principal")


def test_basis_vectors():
    e1 = CircleVector.basis(1)
    assert e1.coeff(1) == pytest.approx(1.0)
    assert abs(e1.coeff(0)) <= 1e-15
    assert l2_circle(e1) == pytest.approx(1.0)
    both = CircleVector(e1.values + CircleVector.basis(0, n=e1.size).values)
    assert l2_circle(both) == pytest.approx(math.sqrt(2.0))


def test_evenness_of_samples():
    vec = CircleVector.from_function(lambda th: np.exp(2j * th) + 3.0)
    n = vec.size
    assert np.abs(vec.values - np.roll(vec.values, n // 2)).max() <= 1e-12
    assert vec.odd_mode_mass() <= 1e-14


def test_parseval():
    vec = CircleVector.from_function(lambda th: np.exp(2j * th) + 0.5 * np.exp(-4j * th))
    assert vec.parseval_defect() <= 1e-8
    ks, a = vec.coeff_array()
    assert np.sum(np.abs(a) ** 2) == pytest.approx(l2_circle(vec) ** 2, abs=1e-12)


def test_fourier_coeffs_examples():
    e1 = CircleVector.basis(1)
    got = fourier_coeffs(e1, 3)
    assert got[1] == pytest.approx(1.0)
    assert max(abs(v) for k, v in got.items() if k != 1) <= 1e-14
    e0 = CircleVector.basis(0)
    assert fourier_coeffs(e0, 2)[0] == pytest.approx(1.0)
    with pytest.raises(DomainError):
        fourier_coeffs(e0, e0.size)  # grid too small for that many modes


def test_fourier_coeffs_cross_module():
    from sl2rep import boundary_form, spherical_vector

    vec = spherical_vector(boundary_form(0.05).form, PAR)
    ks, a = vec.coeff_array()
    mags = np.abs(a)
    # decay past k ~ 1/eps
    k_cut = 4 * int(1 / 0.05)
    inner = mags[np.abs(ks) <= 2]
    outer = mags[np.abs(ks) >= k_cut]
    assert outer.max() <= 1e-4 * inner.max()
    assert vec.parseval_defect() <= 1e-6


def test_act_circle_rotation_fixes_e0():
    e0 = CircleVector.basis(0)
    out = act_circle(GroupElement.rotation(0.8), e0, PAR)
    assert np.abs(out.values - 1.0).max() <= 1e-12


def test_act_circle_diagonal_example():
    e0 = CircleVector.basis(0)
    a = 2.0
    g = GroupElement([[1.0 / a, 0.0], [0.0, a]])
    out = act_circle(g, e0, PAR)
    th = out.thetas()
    expect = (a ** 2 * np.cos(th) ** 2 + a ** -2 * np.sin(th) ** 2) ** ((PAR.lam - 1) / 2)
    assert np.abs(out.values - expect).max() <= 1e-10


def test_act_circle_unitarity(rng):
    e0 = CircleVector.basis(0)
    for t in (0.0, 1.0, 5.0):
        par = SpectralParameter.principal(t)
        for _ in range(10):
            g = random_element(rng, scale=1.0)
            assert abs(l2_circle(act_circle(g, e0, par)) - 1.0) <= 1e-6


def test_act_line_borel_examples():
    u = line_restriction(0.3, PAR)
    xs = np.array([-1.4, 0.2, 2.5])
    shifted = act_line(GroupElement.translation(1.0), u, PAR)
    assert np.abs(shifted(xs) - u(xs - 1.0)).max() <= 1e-14
    g = GroupElement([[2.0, 0.0], [0.0, 0.5]])
    dil = act_line(g, u, PAR)
    expect = 2.0 ** (PAR.lam - 1.0) * u(xs / 4.0)
    assert np.abs(dil(xs) - expect).max() <= 1e-14
    ident = act_line(GroupElement.identity(), u, PAR)
    assert np.abs(ident(xs) - u(xs)).max() == 0.0


def test_act_homomorphism_both_models(rng):
    e0 = CircleVector.basis(0)
    u = circle_to_line(e0, PAR)
    th = np.linspace(0.0, 2 * np.pi, 9)
    xs = np.array([-3.0, -0.4, 0.9, 7.0])
    for _ in range(5):
        g = random_element(rng, scale=0.8)
        h = random_element(rng, scale=0.8)
        c1 = act_circle(compose(g, h), e0, PAR)
        c2 = act_circle(g, act_circle(h, e0, PAR), PAR)
        assert np.abs(c1.evaluate(th) - c2.evaluate(th)).max() <= 1e-8
        l1 = act_line(compose(g, h), u, PAR)
        l2 = act_line(g, act_line(h, u, PAR), PAR)
        assert np.abs(l1(xs) - l2(xs)).max() <= 1e-8


def test_transfer_examples_and_roundtrip():
    e0 = CircleVector.basis(0)
    u = circle_to_line(e0, PAR)
    xs = np.array([-2.0, 0.0, 0.7, 11.0])
    expect = (1 + xs ** 2) ** ((PAR.lam - 1) / 2)
    assert np.abs(u(xs) - expect).max() <= 1e-12
    e1 = CircleVector.basis(1)
    back = line_to_circle(circle_to_line(e1, PAR), PAR)
    th = np.linspace(0.0, 2 * np.pi, 33)
    assert np.abs(back.evaluate(th) - e1.evaluate(th)).max() <= 1e-8


def test_transfer_commutes_with_action(rng):
    e0 = CircleVector.basis(0)
    th = np.linspace(0.05, 6.2, 11)
    for _ in range(5):
        g = random_element(rng, scale=0.8)
        via_line = line_to_circle(act_line(g, circle_to_line(e0, PAR), PAR), PAR)
        via_circle = act_circle(g, e0, PAR)
        assert np.abs(via_line.evaluate(th) - via_circle.evaluate(th)).max() <= 1e-7


def test_line_norm_normalization():
    # (1/pi) int dx/(1+x^2) = 1 pins the line-model norm constant
    from sl2rep import l2_line

    u = circle_to_line(CircleVector.basis(0), PAR)
    assert l2_line(u) == pytest.approx(1.0, abs=1e-10)


def test_dilate():
    u = line_restriction(0.2, PAR)
    d = dilate(u, 2.0)
    xs = np.array([-1.0, 0.3, 4.0])
    assert np.abs(d(xs) - u(xs / 2.0)).max() == 0.0
    assert d.feature_scale == pytest.approx(0.4)
    # the stored axis limit tracks the homogeneity factor t^(1-lam)
    s = 1e9
    probe = 0.5 * s ** (1 - PAR.lam) * (d(s) + d(-s))
    assert abs(d.axis_limit() - probe) <= 1e-8 * abs(probe)


def test_aliasing_warning():
    e_edge = CircleVector.basis(3, n=16)
    with pytest.warns(UserWarning):
        fourier_coeffs(e_edge, 3)
