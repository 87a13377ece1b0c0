import cmath
import math

import mpmath
import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from airy_born.special_functions import (
    ASYMPTOTIC_RADIUS,
    SERIES_RADIUS,
    AiryBranchError,
    AiryDomainError,
    AiryOverflowError,
    airy_ai,
    airy_ai_scaled,
    airy_contour_oracle,
    airy_zero,
    airy_zeros,
)

# reference values from mpmath at 40 digits, frozen
FROZEN_AI = [
    (1 + 1j, 0.060458308371838149197 - 0.15188956587718140235j),
    (-2 + 0.5j, 0.29003094106266102693 + 0.33030787622395855069j),
    (5 - 3j, 0.00022326280609943877211 + 0.000169633646096079685j),
    (-15 + 1j, 6.7662533905237834458 + 1.3399188960692613016j),
    (20 + 20j, 4.4025054335876466097e-19 + 2.5972824190216885668e-18j),
]
FROZEN_ZEROS = {
    1: -2.3381074104597670385,
    2: -4.0879494441309706166,
    3: -5.5205598280955510591,
    10: -12.8287767528657572,
    50: -38.021008677255254433,
    100: -60.455557274116698707,
}
AI0 = 0.35502805388781723926


def rel(a, b):
    return abs(a - b) / abs(b)


def random_points(seed, n, rmax):
    rng = np.random.default_rng(seed)
    r = rmax * np.sqrt(rng.uniform(0, 1, n))
    t = rng.uniform(-math.pi, math.pi, n)
    return r * np.exp(1j * t)


# ------------------------------------------------------------------ airy_ai

def test_value_at_origin():
    expected = 3 ** (-2 / 3) / math.gamma(2 / 3)
    assert airy_ai(0) == pytest.approx(expected, rel=1e-15)
    assert airy_ai(0) == pytest.approx(AI0, rel=1e-15)


@pytest.mark.parametrize("z, expected", FROZEN_AI)
def test_frozen_values(z, expected):
    assert rel(airy_ai(z), expected) < 1e-10


def test_reflection_example():
    w = 1 + 2j
    assert airy_ai(w.conjugate()) == airy_ai(w).conjugate()


def test_first_zero_value():
    assert abs(airy_ai(-2.3381074104597670)) < 1e-10


def test_real_axis_is_real():
    x = np.linspace(-30, 30, 301)
    v = airy_ai(x + 0j)
    assert np.all(v.imag == 0)


def test_against_mpmath_on_disk_of_radius_30():
    for z in random_points(11, 300, 30.0):
        ref = complex(mpmath.airyai(mpmath.mpc(z.real, z.imag)))
        if abs(ref) < 1e-250:
            continue
        assert rel(airy_ai(z), ref) < 1e-10, z


@pytest.mark.parametrize("radius", [SERIES_RADIUS, ASYMPTOTIC_RADIUS])
def test_continuity_across_region_boundaries(radius):
    # the evaluation switches representation at these radii
    for t in np.linspace(-math.pi, math.pi, 37):
        for r in (radius - 1e-9, radius + 1e-9):
            z = r * cmath.exp(1j * t)
            ref = complex(mpmath.airyai(mpmath.mpc(z.real, z.imag)))
            assert rel(airy_ai(z), ref) < 1e-11, z


def test_domain_error_beyond_evaluation_disk():
    with pytest.raises(AiryDomainError):
        airy_ai(2e4)


def test_overflow_signalled():
    # Ai(-i * 1000 ...) grows like exp(|z|^1.5): far outside the double range
    with pytest.raises(AiryOverflowError):
        airy_ai(-3000j)
    with pytest.raises(AiryOverflowError):
        airy_ai(5000.0)  # underflows to zero: also signalled


def test_non_finite_input_rejected():
    with pytest.raises(AiryDomainError):
        airy_ai(complex(float("nan"), 0))


def test_broadcasts_arrays():
    z = np.array([[0, 1j], [2, -3]])
    out = airy_ai(z)
    assert out.shape == (2, 2)
    assert out[0, 0] == pytest.approx(AI0)


# ---------------------------------------------------------- scaled variant

def test_scaled_at_origin():
    assert airy_ai_scaled(0) == pytest.approx(AI0, rel=1e-15)


def test_scaled_at_25_against_extended_precision():
    expected = 0.12605216203160695863
    assert rel(airy_ai_scaled(25.0), expected) < 1e-10
    assert rel(airy_ai_scaled(25.0), airy_contour_oracle(25.0, scaled=True)) < 1e-8


def test_scaled_at_4_matches_unscaled():
    assert rel(airy_ai_scaled(4 + 0j), airy_ai(4.0) * math.exp(16 / 3)) < 1e-10


def test_scaled_finite_far_out():
    w = 900 + 300j
    assert rel(airy_ai_scaled(w), 0.050664870170692756662 - 0.0040840904474504834944j) < 1e-10
    big = airy_ai_scaled(np.array([1e4, 1e4j, 5e3 + 5e3j, -5e3j + 1.0]))
    assert np.all(np.isfinite(big))


def test_scaled_branch_error_on_negative_axis():
    with pytest.raises(AiryBranchError):
        airy_ai_scaled(-2.0)


# ------------------------------------------------------------------- zeros

@pytest.mark.parametrize("n, expected", sorted(FROZEN_ZEROS.items()))
def test_zero_values(n, expected):
    assert abs(airy_zero(n) - expected) < 1e-10
    assert abs(airy_ai(airy_zero(n))) < 1e-10


def test_zero_examples_rounded():
    assert round(airy_zero(1), 10) == -2.3381074105
    assert round(airy_zero(2), 10) == -4.0879494441
    assert round(airy_zero(3), 10) == -5.5205598281


@pytest.mark.parametrize("n", [0, -1, 101])
def test_zero_index_range(n):
    with pytest.raises(IndexError):
        airy_zero(n)


def test_zeros_interlace_and_vanish():
    zs = airy_zeros(100)
    assert np.all(np.diff(zs) < 0)
    assert np.all(zs < 0)
    assert np.max(np.abs(airy_ai(zs))) < 1e-10


# ----------------------------------------------------------- contour oracle

def test_oracle_anchor_values():
    assert abs(airy_contour_oracle(0) - AI0) < 1e-8
    assert rel(airy_contour_oracle(1 + 1j), airy_ai(1 + 1j)) < 1e-8
    assert abs(airy_contour_oracle(-2.3381074105)) < 1e-8


def test_oracle_domain():
    with pytest.raises(AiryDomainError):
        airy_contour_oracle(31.0)


def test_oracle_agreement_on_200_points():
    for z in random_points(5, 200, 10.0):
        ref = airy_contour_oracle(complex(z))
        assert rel(airy_ai(complex(z)), ref) < 1e-8, z


# --------------------------------------------------------------- properties

complex_in_disk = st.tuples(st.floats(0, 10), st.floats(-math.pi, math.pi)).map(
    lambda rt: rt[0] * cmath.exp(1j * rt[1]))


@settings(max_examples=100, deadline=None)
@given(complex_in_disk)
def test_ode_residual(z):
    h = 1e-4
    second = (airy_ai(z + h) - 2 * airy_ai(z) + airy_ai(z - h)) / h ** 2
    zai = z * airy_ai(z)
    assert abs(second - zai) <= 1e-5 * (1 + abs(zai))


@settings(max_examples=100, deadline=None)
@given(st.tuples(st.floats(0, 30), st.floats(-math.pi, math.pi)).map(lambda rt: rt[0] * cmath.exp(1j * rt[1])))
def test_conjugate_symmetry(z):
    a = airy_ai(z.conjugate())
    b = airy_ai(z).conjugate()
    assert abs(a - b) <= 1e-12 * abs(b) + 1e-300


@settings(max_examples=100, deadline=None)
@given(st.tuples(st.floats(0, 25), st.floats(-math.pi / 2, math.pi / 2)).map(lambda rt: rt[0] * cmath.exp(1j * rt[1])))
def test_scaled_unscaled_consistency(z):
    if z.real <= 0:
        z = complex(1e-3, z.imag)
    back = airy_ai_scaled(z) * cmath.exp(-2 / 3 * z ** 1.5)
    assert abs(back - airy_ai(z)) <= 1e-10 * abs(airy_ai(z))
