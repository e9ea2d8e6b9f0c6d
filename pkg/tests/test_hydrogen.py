import cmath
import math
from fractions import Fraction

import mpmath as mp
import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

import oracles
from mollowqed.constants import PhysicalConstants
from mollowqed.corrections import relativistic_dipole
from mollowqed.hydrogen import (
    EnergyParameter,
    HydrogenLevel,
    decay_rate_lowest_order,
    dipole_component,
    dipole_spinless_z,
    dipole_z,
    dirac_energy,
    energy_of_t,
    off_resonant_energies,
    relativistic_energy,
    spin_sum,
    t_of_energy,
    transition,
)

H = Fraction(1, 2)
GROUND_UP = HydrogenLevel(1, 0, H, H)


def as_complex(expr):
    return complex(sympy.N(expr, 30))


def test_dirac_energy_fine_structure():
    c = PhysicalConstants()
    split = relativistic_energy(2, 3 * H, c) - relativistic_energy(2, H, c)
    with mp.workdps(40):
        expected = mp.mpf("7.2973525693e-3") ** 4 * mp.mpf("1.2355899638e20") / 32
    assert split == pytest.approx(float(expected), rel=1e-14)
    # the full levels carry the binding energy, so the difference keeps fewer digits
    full = dirac_energy(2, 3 * H, c, include_rest_mass=False) - dirac_energy(2, H, c, False)
    assert full == pytest.approx(float(expected), rel=1e-10)
    # literature value 10.969 GHz includes higher orders and the reduced mass
    assert split == pytest.approx(1.0969e10, rel=3e-3)


def test_dirac_energy_without_coupling():
    c = PhysicalConstants(alpha=0.0)
    assert dirac_energy(1, H, c) == c.electron_mass_frequency


def test_relativistic_energy_ground_state():
    c = PhysicalConstants()
    assert relativistic_energy(1, H, c) == pytest.approx(-c.z_alpha**4 * c.electron_mass_frequency / 8)


@pytest.mark.parametrize("m_l", [-1, 0, 1])
@pytest.mark.parametrize("component", ["x", "y", "z"])
def test_spinless_elements_against_sympy(component, m_l):
    up = HydrogenLevel(2, 1, 3 * H, H + m_l) if abs(H + m_l) <= 3 * H else None
    expected = as_complex(oracles.schroedinger_dipole(component, m_l))
    if m_l == 0 and component == "z":
        assert dipole_spinless_z() == pytest.approx(expected.real, rel=1e-15)
    # spin-up 2P_3/2 with m = 3/2 is pure m_l = 1, a direct probe of the spatial element
    if m_l == 1:
        got = dipole_component(component, GROUND_UP, HydrogenLevel(2, 1, 3 * H, 3 * H))
        assert got == pytest.approx(expected, abs=1e-15)
    assert up is None or isinstance(up, HydrogenLevel)


@pytest.mark.parametrize("j", [H, 3 * H])
@pytest.mark.parametrize("m_i", [H, -H])
@pytest.mark.parametrize("m_f", [H, -H])
def test_spin_coupled_z_elements_against_sympy(j, m_i, m_f):
    got = dipole_z(HydrogenLevel(1, 0, H, m_f), HydrogenLevel(2, 1, j, m_i))
    if m_i != m_f:
        assert got == 0.0
        return
    expected = oracles.schroedinger_dipole("z", None, sympy.Rational(j), sympy.Rational(m_i),
                                           sympy.Rational(m_f))
    assert got == pytest.approx(float(expected), rel=1e-15)


def test_published_closed_forms():
    d_half = dipole_z(GROUND_UP, HydrogenLevel(2, 1, H, H))
    d_three = dipole_z(GROUND_UP, HydrogenLevel(2, 1, 3 * H, H))
    assert d_half == pytest.approx(-(2**7 / 3**5) * math.sqrt(2 / 3), rel=1e-15)
    assert d_three == pytest.approx((2**8 / 3**5) * math.sqrt(1 / 3), rel=1e-15)
    assert d_three / d_half == pytest.approx(-math.sqrt(2), rel=1e-15)
    assert dipole_z(GROUND_UP, HydrogenLevel(2, 1, H, -H)) == 0.0


def test_ratio_exact_in_closed_form():
    half = oracles.schroedinger_dipole("z", None, sympy.Rational(1, 2), sympy.Rational(1, 2),
                                       sympy.Rational(1, 2))
    three = oracles.schroedinger_dipole("z", None, sympy.Rational(3, 2), sympy.Rational(1, 2),
                                        sympy.Rational(1, 2))
    assert sympy.simplify(three / half + sympy.sqrt(2)) == 0


@pytest.mark.parametrize("j,m_i", [(H, H), (H, -H), (3 * H, H), (3 * H, -H), (3 * H, 3 * H),
                                   (3 * H, -3 * H)])
def test_spin_sum_rule(j, m_i):
    assert spin_sum(j, m_i) == pytest.approx(2**15 / 3**10, rel=1e-14)


def test_opposite_spin_channel_twice_as_likely():
    final = HydrogenLevel(2, 1, H, H)
    same = sum(abs(dipole_component(c, HydrogenLevel(1, 0, H, H), final)) ** 2 for c in "xyz")
    flip = sum(abs(dipole_component(c, HydrogenLevel(1, 0, H, -H), final)) ** 2 for c in "xyz")
    assert flip == pytest.approx(2 * same, rel=1e-14)


def test_lowest_order_decay_rate():
    c = PhysicalConstants()
    with mp.workdps(40):
        expected = (mp.mpf(2) ** 8 / mp.mpf(3) ** 8 * mp.mpf("7.2973525693e-3") ** 5
                    * mp.mpf("1.2355899638e20"))
    assert decay_rate_lowest_order(c) == pytest.approx(float(expected), rel=1e-14)
    assert decay_rate_lowest_order(c) == pytest.approx(9.98e7, rel=1e-3)
    # the adopted width differs by the reduced mass and radiative effects, about 0.1 percent
    assert decay_rate_lowest_order(c) / transition(H).gamma_j.value == pytest.approx(1, abs=3e-3)


def test_t_values_at_the_four_energies():
    e1, e2, e3, e4 = off_resonant_energies()
    assert t_of_energy(2, e1) == pytest.approx(0.5, rel=1e-15)
    assert t_of_energy(1, e4) == pytest.approx(2.0, rel=1e-15)
    assert t_of_energy(2, e2) == pytest.approx(cmath.sqrt(-0.5), rel=1e-15)
    assert t_of_energy(1, e3) == pytest.approx(2 / math.sqrt(7), rel=1e-15)


@given(st.floats(-1e16, 1e16).filter(lambda x: abs(x) > 1e3), st.integers(1, 2))
def test_t_energy_round_trip(energy, n):
    t = t_of_energy(n, energy)
    assert t.real >= 0
    assert energy_of_t(n, t).real == pytest.approx(energy, rel=1e-12)
    p = EnergyParameter.from_energy(energy, n, 0)
    assert EnergyParameter.from_t(p.t, n, 0).zeta == pytest.approx(p.zeta, rel=1e-12)


def test_invalid_levels():
    with pytest.raises(ValueError):
        HydrogenLevel(1, 1, H, H)
    with pytest.raises(ValueError):
        HydrogenLevel(2, 1, 5 * H, H)
    with pytest.raises(ValueError):
        HydrogenLevel(2, 1, H, 3 * H)
    with pytest.raises(ValueError):
        transition(Fraction(5, 2))
    with pytest.raises(ValueError):
        t_of_energy(1, 0.0)


@pytest.mark.parametrize("j", [H, 3 * H])
def test_relativistic_dipole_from_dirac_states(j):
    """Extract the (Z alpha)^2 coefficient from exact Dirac wavefunctions."""
    coeffs = []
    za_values = (mp.mpf("1e-3"), mp.mpf("2e-3"))
    for za in za_values:
        ratio = oracles.dirac_dipole_ratio(sympy.Rational(j), za)
        coeffs.append((ratio - 1) / za**2)
    # remove the (Z alpha)^4 remainder
    extrapolated = (4 * coeffs[0] - coeffs[1]) / 3
    c = PhysicalConstants()
    rho = relativistic_dipole(j)
    assert rho.value / c.z_alpha**2 == pytest.approx(float(extrapolated), rel=1e-9)
