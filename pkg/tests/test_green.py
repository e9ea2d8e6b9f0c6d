import cmath
import math
import random

import mpmath as mp
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from mollowqed import green
from mollowqed.constants import resonance_frequency
from mollowqed.hydrogen import off_resonant_energies, t_of_energy

T_IMAG = 1j / math.sqrt(2)
T_E3 = 2 / math.sqrt(7)


def _z(t):
    return ((1 - t) / (1 + t)) ** 2


def test_phi_at_unit_t():
    assert green.phi(1, 1.0) == 1
    assert green.phi(2, 1.0) == 1
    assert green.phi(1, 1.0 + 1e-9) == pytest.approx(1.0, abs=1e-8)


def test_phi_against_direct_series():
    assert green.phi(1, 0.3) == pytest.approx(complex(oracles.phi_series(1, 0.3)), rel=1e-14)


def test_phi_on_unit_circle():
    # |z| = 1 exactly for purely imaginary t, where the direct series is only conditionally convergent
    assert abs(_z(T_IMAG)) == pytest.approx(1.0, abs=1e-15)
    value = green.phi(2, T_IMAG)
    assert cmath.isfinite(value)
    assert value == pytest.approx(complex(oracles.phi_direct(2, T_IMAG)), rel=1e-13)


@settings(max_examples=60, deadline=None)
@given(st.floats(0.02, 4.0), st.floats(-3.0, 3.0), st.sampled_from([1, 2]))
def test_phi_against_mpmath(re, im, n):
    t = complex(re, im)
    if min(abs(n * t - k) for k in range(1, 12)) < 1e-3:
        return
    assert green.phi(n, t) == pytest.approx(complex(oracles.phi_direct(n, t)), rel=1e-11)


@pytest.mark.parametrize("n,t", [(1, 2.0), (1, 3.0), (2, 0.5), (2, 1.5)])
def test_phi_poles(n, t):
    with pytest.raises(green.GreenPoleError):
        green.phi(n, t)


def _closed_vs_mpmath(key, t):
    with mp.workdps(90):
        tm = mp.mpmathify(t)
        return complex(green._FORMS[key][1](tm) + green._FORMS[key][2](tm)
                       * oracles.phi_direct(green._FORMS[key][0], tm, dps=90))


@pytest.mark.parametrize("t", [1 + 1e-7, 1 - 1e-6, 1 + 1e-4, 0.9999])
@pytest.mark.parametrize("key", ["g", "e"])
def test_cancellation_guard_near_unit_t(key, t):
    f = green.unreduced_matrix_g if key == "g" else green.unreduced_matrix_e
    assert f(t) == pytest.approx(_closed_vs_mpmath(key, t), rel=1e-12)


def _random_real_t(rng, count):
    values = []
    while len(values) < count:
        t = rng.uniform(0.1, 0.9) if rng.random() < 0.5 else rng.uniform(1.1, 3.0)
        if min(abs(t - 2.0), abs(t - 0.5), abs(t - 1.5), abs(2 * t - 3)) > 0.05:
            values.append(t)
    return values


@pytest.mark.parametrize("kind", ["g", "e"])
def test_closed_form_against_laguerre_sum(kind):
    f = green.unreduced_matrix_g if kind == "g" else green.unreduced_matrix_e
    for t in _random_real_t(random.Random(7), 8):
        oracle = green.unreduced_matrix_oracle(kind, t, tol=1e-11)
        assert f(t) == pytest.approx(oracle.value, rel=1e-8), t


def test_ground_element_at_third_energy():
    oracle = green.unreduced_matrix_oracle("g", T_E3, tol=1e-12)
    assert green.unreduced_matrix_g(T_E3) == pytest.approx(oracle.value, rel=1e-8)


def test_excited_element_at_imaginary_t():
    oracle = green.unreduced_matrix_oracle("e", T_IMAG, tol=1e-10)
    assert green.unreduced_matrix_e(T_IMAG) == pytest.approx(oracle.value, rel=1e-6)


def test_component_recombination():
    for t in (0.3, 0.77, 1.3, 2.6, T_IMAG):
        with mp.workdps(50):
            tm = mp.mpmathify(t)
            exact = green.unreduced_matrix_e(tm)
            parts = mp.mpf(1) / 3 * green.radial_part_s(tm) + mp.mpf(4) / 15 * green.radial_part_d(tm)
            assert abs(exact - parts) < mp.mpf(10) ** -40 * abs(exact)
        expected = (green.ANGULAR_WEIGHTS[0] * green.radial_part_s(t)
                    + green.ANGULAR_WEIGHTS[2] * green.radial_part_d(t))
        assert green.unreduced_matrix_e(t) == pytest.approx(expected, rel=1e-12)


def test_standard_angular_weight_is_five_halves():
    assert green.STANDARD_ANGULAR_WEIGHTS[2] / green.ANGULAR_WEIGHTS[2] == pytest.approx(2.5)
    t = 0.8
    z_only = green.unreduced_matrix_oracle("e", t, tol=1e-12).value
    standard = green.unreduced_matrix_oracle("e", t, tol=1e-12,
                                             weights=green.STANDARD_ANGULAR_WEIGHTS).value
    d_part = green.radial_part_d(t)
    assert standard - z_only == pytest.approx((2 / 3 - 4 / 15) * d_part, rel=1e-9)


@pytest.mark.parametrize("kind", ["g", "e"])
def test_unreduced_pole_residue(kind):
    for eps in (1e-6, 1e-8, 1e-10):
        r = green.unreduced_pole_residue(kind, eps)
        # eps times the regular part, which is below 100 for both kinds
        assert float(r) == pytest.approx(green.DIPOLE_SQUARED, rel=200 * eps)


@pytest.mark.parametrize("kind", ["g", "e"])
@pytest.mark.parametrize("pole", ["resonant_term", "limit"])
def test_pole_value_analytic_vs_offsets(kind, pole):
    analytic = green.reduced_pole_value(kind, pole)
    richardson = green.reduced_pole_richardson(kind, pole)
    assert mp.isfinite(analytic)
    assert float(abs(analytic / richardson - 1)) < 1e-12


@pytest.mark.parametrize("kind,n,t0,e_res", [("g", 1, 2, -1 / 8), ("e", 2, 0.5, -0.5)])
def test_limit_convention_from_laguerre_sum(kind, n, t0, e_res):
    """Sturmian oracle minus the explicit bound-state term, extrapolated onto the pole."""
    with mp.workdps(40):
        xs, ys = [], []
        for eps in ("1e-3", "2e-3", "4e-3", "8e-3"):
            e = mp.mpf(eps)
            t = t0 + e
            value = green.unreduced_matrix_oracle(kind, t, tol=1e-24, dps=40).value
            zeta = -1 / (2 * n**2 * t**2)
            xs.append(e)
            ys.append(mp.mpf(value.real) - mp.mpf(2) ** 15 / mp.mpf(3) ** 10 / (e_res - zeta))
        extrapolated = green._neville_at_zero(xs, ys)
    assert float(extrapolated) == pytest.approx(float(green.reduced_pole_value(kind, "limit")),
                                                rel=1e-7)


@pytest.mark.parametrize("kind,t0", [("g", 2.0), ("e", 0.5)])
def test_reduced_element_continuous_through_pole(kind, t0):
    limit = complex(green.reduced_pole_value(kind, "limit"))
    for eps in (1e-3, 1e-4, 1e-5):
        for sign in (1, -1):
            value = green.reduced_matrix(kind, t0 + sign * eps, "limit")
            assert abs(value - limit) < 50 * eps * abs(limit)
    assert green.reduced_matrix(kind, t0, "limit") == pytest.approx(limit, rel=1e-15)


def test_conventions_differ_only_at_the_pole():
    t = 0.7
    assert green.reduced_matrix("g", t, "limit") == green.reduced_matrix("g", t, "resonant_term")
    assert complex(green.reduced_pole_value("g", "resonant_term")) == pytest.approx(
        4.21135186199778, rel=1e-13)
    assert complex(green.reduced_pole_value("g", "limit")) == pytest.approx(
        3.10149394738449, rel=1e-13)


@settings(max_examples=25, deadline=None)
@given(st.floats(0.05, 5.0), st.sampled_from(["g", "e"]))
def test_reduced_real_below_threshold(t, kind):
    res = {"g": 2.0, "e": 0.5}[kind]
    n = {"g": 1, "e": 2}[kind]
    if min(abs(n * t - k) for k in range(1, 12) if k != n * res) < 1e-3:
        return
    value = complex(green.reduced_matrix(kind, t, "limit"))
    assert abs(value.imag) <= 1e-12 * abs(value)


def test_energy_wrappers(data):
    e1, e2, e3, e4 = off_resonant_energies(data.constants)
    assert green.reduced_matrix_g(e3, data.constants) == pytest.approx(
        complex(green.reduced_matrix("g", T_E3)), rel=1e-14)
    assert green.reduced_matrix_e(e1, data.constants) == pytest.approx(
        complex(green.reduced_pole_value("e")), rel=1e-14)
    assert t_of_energy(2, e2, data.constants) == pytest.approx(T_IMAG, rel=1e-15)


def test_tagged_element():
    el = green.matrix_element("reduced_g", 0.8)
    assert el.kind == "reduced_g"
    assert el.value == pytest.approx(complex(green.reduced_matrix("g", 0.8)))
    with pytest.raises(ValueError):
        green.matrix_element("bogus", 0.8)


@pytest.mark.parametrize("pole,real", [("resonant_term", 2.330548), ("limit", 2.452423)])
def test_off_resonant_dimensionless(pole, real):
    scaled = green.off_resonant_dimensionless(pole) * 0.375
    assert scaled.real == pytest.approx(real, abs=2e-6)
    assert scaled.imag == pytest.approx(-0.088245, abs=1e-6)


def test_imaginary_part_from_laguerre_sum():
    """The imaginary part of D comes from the complex point alone."""
    oracle = green.unreduced_matrix_oracle("e", T_IMAG, tol=1e-10).value
    reduced = oracle - green.DIPOLE_SQUARED / (-0.5 + 1 / (8 * T_IMAG**2))
    imag = -reduced.imag / (4 * green.DIPOLE_SQUARED) * 0.375
    assert imag == pytest.approx(-0.088245, abs=1e-6)
    assert resonance_frequency() > 0


def test_oracle_convergence_error():
    with pytest.raises(green.ConvergenceError):
        green.radial_green_oracle(1, "1S", 0.3, k_max=5, tol=1e-30)
