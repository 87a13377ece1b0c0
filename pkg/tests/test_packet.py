import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from airy_born.packet import (
    AiryPacketParams,
    BeamKinematics,
    SpecialPointKind,
    effective_spatial_wavefunction,
    kinetic_energy_ev,
    momentum_wavefunction,
    special_point,
    validate_regime,
)
from airy_born.quadrature import gauss_hermite


def norm_integral(p: AiryPacketParams, n=80):
    # |Phi|² = N² exp(-2 k² sigma²) is exactly Gaussian, but integrate the
    # full complex function numerically so the phases are exercised too.
    x, w = gauss_hermite(n)
    k = x / (math.sqrt(2.0) * p.sigma_perp)
    kx, ky = np.meshgrid(k, k, indexing="ij")
    phi = momentum_wavefunction(p, kx, ky)
    weight = np.exp(2 * (kx ** 2 + ky ** 2) * p.sigma_perp ** 2)
    jac = 1.0 / (2.0 * p.sigma_perp ** 2)
    return float(np.sum(w[:, None] * w[None, :] * np.abs(phi) ** 2 * weight) * jac / (2 * math.pi))


def test_norm_fixed_at_construction():
    p = AiryPacketParams(1.7, 3.0, 2.0)
    assert p.norm == 2 * 1.7
    assert momentum_wavefunction(p, 0.0, 0.0) == pytest.approx(2 * 1.7)


def test_invalid_parameters_rejected():
    with pytest.raises(ValueError):
        AiryPacketParams(0.0, 1.0, 1.0)
    with pytest.raises(ValueError):
        AiryPacketParams(1.0, -1.0, 1.0)
    with pytest.raises(ValueError):
        AiryPacketParams(1.0, 1.0, 1.0, sigma_z=0.0)
    with pytest.raises(ValueError):
        BeamKinematics(0.0)


def test_modulus_independent_of_phase_parameters():
    k = np.linspace(-2, 2, 9)
    a = momentum_wavefunction(AiryPacketParams(1.0, 0.0, 0.0), k, k[::-1])
    b = momentum_wavefunction(AiryPacketParams(1.0, 2.5, 0.7, 3.0, -1.0), k, k[::-1])
    assert np.allclose(np.abs(a), np.abs(b), rtol=1e-14)


@settings(max_examples=30, deadline=None)
@given(st.floats(0.3, 10), st.floats(0, 3), st.floats(0, 3), st.floats(-20, 20), st.floats(-20, 20))
def test_normalization(sigma, rx, ry, bx, by):
    p = AiryPacketParams(sigma, rx * sigma, ry * sigma, bx, by)
    assert abs(norm_integral(p) - 1.0) < 1e-8


def test_normalization_brute_force_grid():
    p = AiryPacketParams(1.0, 2.0, 2.0, 4.8, 4.8)
    k = np.linspace(-6, 6, 1201)
    kx, ky = np.meshgrid(k, k, indexing="ij")
    tot = np.trapezoid(np.trapezoid(np.abs(momentum_wavefunction(p, kx, ky)) ** 2, k), k)
    assert abs(tot / (2 * math.pi) - 1.0) < 1e-10


def test_kinematics_fields():
    kin = BeamKinematics.from_kappa0(10.0, 2.0)
    assert kin.kappa0 == pytest.approx(2.0)
    assert kin.p_f == pytest.approx(math.sqrt(104.0))
    assert BeamKinematics(10.0).p_f == 10.0


# ------------------------------------------------------- coordinate space

def test_airy_argument_real_at_s0():
    # at s = 0 each axis factor reduces to Ai(-x/xi + sigma^4/xi^4) up to real factors
    p = AiryPacketParams(1.0, 2.0, 3.0)
    v = effective_spatial_wavefunction(p, 1.3, -0.4)
    assert abs(v.imag) <= 1e-15 * abs(v)


def test_type1_point_is_a_zero():
    p = AiryPacketParams.symmetric(1.0)
    x = np.linspace(-4, 12, 161)
    X, Y = np.meshgrid(x, x, indexing="ij")
    peak = np.max(np.abs(effective_spatial_wavefunction(p, X, Y)) ** 2)
    for m in (1, 2, 3):
        sp = special_point(p, m, m)
        v = effective_spatial_wavefunction(p, sp.b_x, sp.b_y)
        assert abs(v) ** 2 < 1e-10 * peak


def test_density_has_one_main_lobe_and_a_tail_quadrant():
    p = AiryPacketParams.symmetric(1.0)
    x = np.linspace(-10, 25, 351)
    X, Y = np.meshgrid(x, x, indexing="ij")
    d = np.abs(effective_spatial_wavefunction(p, X, Y)) ** 2
    i, j = np.unravel_index(np.argmax(d), d.shape)
    assert x[i] < 4.8 and x[j] < 4.8
    # oscillatory structure extends to large positive x and y only
    assert d[(X > 10) & (Y > 10)].max() > 1e3 * d[(X < -6) & (Y < -6)].max()


def test_swap_symmetry():
    p = AiryPacketParams(1.2, 2.0, 3.1, 1.5, -2.0)
    q = p.swapped()
    for s in (0.0, 0.7, 5.0):
        a = effective_spatial_wavefunction(p, 1.1, -0.3, s=s, Q=(0.4, -0.9))
        b = effective_spatial_wavefunction(q, -0.3, 1.1, s=s, Q=(-0.9, 0.4))
        assert abs(abs(a) - abs(b)) <= 1e-12 * abs(a)


def test_gaussian_fallback_is_exact_gaussian():
    sigma = 1.5
    p = AiryPacketParams(sigma, 0.0, 0.0)
    x = np.linspace(-5, 5, 11)
    X, Y = np.meshgrid(x, x)
    v = effective_spatial_wavefunction(p, X, Y)
    expected = 2 * sigma / (4 * math.pi * sigma ** 2) * np.exp(-(X ** 2 + Y ** 2) / (4 * sigma ** 2))
    assert np.allclose(v, expected, rtol=1e-13, atol=0)


def test_small_xi_approaches_gaussian():
    sigma = 1.0
    airy = AiryPacketParams(sigma, 1e-2 * sigma, 1e-2 * sigma)
    gauss = AiryPacketParams(sigma, 0.0, 0.0)
    x = np.linspace(-2 * sigma, 2 * sigma, 9)
    X, Y = np.meshgrid(x, x)
    da = np.abs(effective_spatial_wavefunction(airy, X, Y)) ** 2
    dg = np.abs(effective_spatial_wavefunction(gauss, X, Y)) ** 2
    assert np.max(np.abs(da / dg - 1)) < 1e-3


def test_large_s_stays_finite():
    # without the exp(-s Q² a²/4) damping of the amplitude integrand the
    # function itself grows with s when Q != 0, so probe Q = 0 here
    p = AiryPacketParams.symmetric(1.0, b=20.0)
    s = np.array([0.0, 10.0, 100.0, 400.0])
    v = effective_spatial_wavefunction(p, 20.0, -20.0, s=s)
    assert np.all(np.isfinite(v))


# --------------------------------------------------------- special points

def test_first_type1_point():
    sp = special_point(AiryPacketParams.symmetric(1.0), 1, 1)
    assert sp.kind is SpecialPointKind.TYPE1
    assert sp.b_x == pytest.approx(4.8012148209, abs=1e-9)
    assert sp.b_y == sp.b_x
    assert sp.indices == (1, 1)


def test_diagonal_points_in_sigma_units():
    sigma = 3.0
    p = AiryPacketParams.symmetric(sigma)
    values = [special_point(p, m, m).b_x / sigma for m in (1, 2, 3)]
    assert values == pytest.approx([4.8012148, 8.3008989, 11.1661197], abs=1e-6)


def test_type2_points_leave_other_axis():
    p = AiryPacketParams(2.0, 4.0, 4.0, b_x=0.5, b_y=-1.0)
    sx = special_point(p, 1, 0)
    sy = special_point(p, 0, 2)
    assert sx.kind is SpecialPointKind.TYPE2X and sx.b_y == -1.0
    assert sy.kind is SpecialPointKind.TYPE2Y and sy.b_x == 0.5
    with pytest.raises(ValueError):
        special_point(p, 0, 0)


def test_special_points_increase_with_index():
    p = AiryPacketParams(1.0, 1.5, 2.5)
    bx = [special_point(p, m, 0).b_x for m in range(1, 30)]
    by = [special_point(p, 0, n).b_y for n in range(1, 30)]
    assert np.all(np.diff(bx) > 0) and np.all(np.diff(by) > 0)


# ------------------------------------------------------------------ regime

def test_regime_warning_for_narrow_packet():
    w = validate_regime(AiryPacketParams(1.0, 2.0, 2.0, sigma_z=100.0), BeamKinematics(10.0))
    assert len(w) == 1 and "1/sigma_perp" in w[0]


def test_regime_clean():
    assert validate_regime(AiryPacketParams(10.0, 20.0, 20.0, sigma_z=50.0), BeamKinematics(10.0)) == []


def test_regime_short_packet():
    w = validate_regime(AiryPacketParams(10.0, 20.0, 20.0, sigma_z=1.0), BeamKinematics(10.0))
    assert any("a << sigma_z" in m for m in w)


def test_regime_conical_condition_only_with_kappa0():
    p = AiryPacketParams(10.0, 20.0, 20.0, sigma_z=50.0)
    assert validate_regime(p, BeamKinematics.from_kappa0(10.0, 5.0))
    assert not validate_regime(p, BeamKinematics(10.0))


# ------------------------------------------------------------------ energy

def test_kinetic_energy():
    assert kinetic_energy_ev(BeamKinematics(10.0)) == pytest.approx(1360.57, abs=0.01)
    assert kinetic_energy_ev(1.0) == pytest.approx(13.6057, abs=1e-4)
    assert kinetic_energy_ev(0.0) == 0.0
