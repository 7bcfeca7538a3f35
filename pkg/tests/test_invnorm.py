import math

import numpy as np
import pytest

from sl2rep import (GroupElement, LineVector, SpectralParameter, dyadic_bound,
                    l2_line, orbit_upper_bound, seminorm_inf, sobolev_line)
from sl2rep.cutoffs import smoothstep, unit_bump
from sl2rep.errors import DomainError, InvariantViolation
from sl2rep.invnorm import (HomogeneousFamily, bulk_vector, family_vector,
                            invariant_norm_bound, verify_family)
from sl2rep.invnorm import power_family

PAR = SpectralParameter.principal(1.0)


def test_family_homogeneity_verifier():
    fam = power_family(-0.5)
    verify_family(fam, 0.01)  # passes

    def bad_gen(eps):
        return LineVector(lambda x: np.exp(-0.5 * np.log(x * x + eps)) + 0j,
                          feature_scale=eps)

    bad = HomogeneousFamily(-0.5 + 0j, bad_gen, fam.tau_gen, 2, -0.5)
    with pytest.raises(InvariantViolation):
        verify_family(bad, 0.01)


def test_family_vector_supported():
    fam = power_family(-0.5)
    u = family_vector(fam, 0.05)
    assert np.abs(u(np.array([-1.2, 1.2, 3.0]))).max() == 0.0
    assert np.abs(u(np.array([0.0]))).max() > 0.0


def test_dyadic_bound_soundness_and_laws():
    results = {}
    for kappa in (-1.0, -0.5, 0.0):
        fam = power_family(kappa)
        vals = {}
        for k in (6, 12, 18):
            eps = 2.0 ** -k
            cert = dyadic_bound(fam, eps)
            vals[k] = cert.value
            assert cert.value > 0 and cert.eps_term >= 0
            if kappa == -0.5:
                assert l2_line(family_vector(fam, eps)) <= cert.value
        results[kappa] = vals
    # kappa < r: certificate grows like eps^(kappa - r)
    ks = (12, 18)
    slope = (math.log(results[-1.0][18]) - math.log(results[-1.0][12])) / (
        math.log(2.0 ** -18) - math.log(2.0 ** -12))
    assert abs(slope - (-0.5)) <= 0.05
    # kappa > r: bounded
    assert results[0.0][18] / results[0.0][6] <= 1.5
    # kappa = r: logarithmic
    ratio = [results[-0.5][k] / (k * math.log(2)) for k in (6, 12, 18)]
    assert max(ratio) / min(ratio) <= 1.2


def test_dyadic_bound_grid_refinement_stability():
    fam = power_family(-0.5)
    a = dyadic_bound(fam, 2.0 ** -8, nodes_per_octave=12).value
    b = dyadic_bound(fam, 2.0 ** -8, nodes_per_octave=24).value
    assert abs(a - b) / a < 0.02


def test_dyadic_bound_domain():
    fam = power_family(-0.5)
    with pytest.raises(DomainError):
        dyadic_bound(fam, 0.0)
    with pytest.raises(DomainError):
        dyadic_bound(fam, 1.5)


def test_measured_constants_finite():
    fam = power_family(-0.5)
    cert = dyadic_bound(fam, 2.0 ** -6, measure=True)
    assert cert.constants["C_tr"] > 0
    assert cert.constants["S_f"] > 0


def _far_bump():
    def fn(x):
        out = np.zeros_like(x, dtype=complex)
        m = (x > 4.0) & (x < 8.0)
        xm = x[m]
        out[m] = np.exp(-1.0 / np.maximum(xm - 4.0, 1e-300)) * \
            np.exp(-1.0 / np.maximum(8.0 - xm, 1e-300))
        return out

    return LineVector(fn, support=(4.0, 8.0), par=PAR)


def test_orbit_upper_bound_examples():
    u = _far_bump()
    s2 = lambda v: sobolev_line(v, 2)
    base = s2(u)
    # identity only reproduces the plain norm
    assert orbit_upper_bound(u, s2, [GroupElement.identity()], PAR) == pytest.approx(base)
    # relaxing the far-out bump by a dilation strictly lowers the bound
    g = GroupElement([[0.5, 0.0], [0.0, 2.0]])
    bound = orbit_upper_bound(u, s2, [g], PAR)
    assert bound < base
    # never exceeds the plain norm even with unhelpful samples
    squeeze = GroupElement([[2.0, 0.0], [0.0, 0.5]])
    assert orbit_upper_bound(u, s2, [squeeze], PAR) <= base + 1e-12


def test_orbit_upper_bound_translation_invariance():
    # translating the vector and the sample set together leaves the bound fixed
    u = _far_bump()
    s2 = lambda v: sobolev_line(v, 2)
    from sl2rep.repmodels import act_line

    g0 = GroupElement.translation(2.0)
    g = GroupElement([[0.5, 0.0], [0.0, 2.0]])
    base = orbit_upper_bound(u, s2, [g], PAR)
    moved = act_line(g0, u, PAR)
    shifted_samples = [GroupElement(g0.mat @ g.mat)]
    assert orbit_upper_bound(moved, s2, shifted_samples, PAR) == pytest.approx(
        base, rel=1e-8)


def test_seminorm_inf_contracts():
    u = _far_bump()
    n0 = lambda v: sobolev_line(v, 0)
    with pytest.raises(DomainError):
        seminorm_inf([], u, 1)
    assert seminorm_inf([n0], u, 1) == pytest.approx(n0(u))

    heavy_left = lambda v: sobolev_line(v.with_mask(
        lambda x: 1.0 + 50.0 * smoothstep(6.0 - x)), 0)
    heavy_right = lambda v: sobolev_line(v.with_mask(
        lambda x: 1.0 + 50.0 * smoothstep(x - 6.0)), 0)
    b1 = seminorm_inf([heavy_left, heavy_right], u, 1)
    b2 = seminorm_inf([heavy_left, heavy_right], u, 2)
    b3 = seminorm_inf([heavy_left, heavy_right], u, 3)
    assert b2 <= b1 and b3 <= b2
    # the two-piece split dodges both heavy weights
    assert b2 <= 0.5 * b1


def test_invariant_norm_bound_log_law_quick():
    par = SpectralParameter.principal(0.0)
    grid = [2.0 ** -6, 2.0 ** -10, 2.0 ** -14]
    vals = [invariant_norm_bound(par, e) for e in grid]
    ratios = [v / math.log(1.0 / e) for v, e in zip(vals, grid)]
    assert max(ratios) / min(ratios) <= 1.25


def test_invariant_norm_bound_domain():
    with pytest.raises(DomainError):
        invariant_norm_bound(PAR, 0.5)


def test_branch_splits_reconstruct_boundary_vector():
    # tau * f on each chart equals the masked boundary vector exactly
    from sl2rep.continuation import boundary_form, line_restriction
    from sl2rep.invnorm import _branch_splits

    for par in (PAR, SpectralParameter.complementary(-0.5)):
        (f_y, tau_y), (f_x, tau_x) = _branch_splits(par)
        for eps in (0.3, 0.01):
            xs = np.linspace(-0.999, 0.999, 41)
            u = line_restriction(eps, par)
            lhs = tau_y(eps)(xs) * f_y(eps)(xs)
            rhs = unit_bump(xs) * u(xs)
            assert np.abs(lhs - rhs).max() <= 1e-12 * np.abs(rhs).max()
            # rotated chart: the restriction through (1, -x)
            bf = boundary_form(eps)
            rotated = np.exp((par.lam - 1) / 2 * np.log(bf.form(np.ones_like(xs), -xs)))
            lhs2 = tau_x(eps)(xs) * f_x(eps)(xs)
            rhs2 = unit_bump(xs) * rotated
            assert np.abs(lhs2 - rhs2).max() <= 1e-12 * np.abs(rhs2).max()


def test_bulk_vector_bounded_in_eps():
    # away from both axes the boundary vector stays uniformly tame
    a = np.abs(bulk_vector(PAR, 0.1).values).max()
    b = np.abs(bulk_vector(PAR, 0.001).values).max()
    assert b <= 2.0 * a


def test_partition_masks_sum_to_one():
    th = np.linspace(0.01, 2 * np.pi - 0.01, 997)
    cot = np.cos(th) / np.sin(th)
    tan = np.sin(th) / np.cos(th)
    total = unit_bump(cot) + unit_bump(-tan)
    assert total.max() <= 1.0 + 1e-12
    bulk = 1.0 - total
    assert bulk.min() >= -1e-12
