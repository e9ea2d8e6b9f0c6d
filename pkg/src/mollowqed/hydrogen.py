"""Hydrogenic bound-state data for the 1S-2P transition.

Lengths returned by the dipole helpers are in units of the Bohr radius of
the ion, 1 / (Z alpha m).  Energies are frequencies in Hz.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction

from .constants import InputData, PhysicalConstants, UncertainValue, combine_linear

__all__ = [
    "HydrogenLevel",
    "TransitionSpec",
    "EnergyParameter",
    "transition",
    "dirac_energy",
    "relativistic_energy",
    "dipole_component",
    "dipole_z",
    "dipole_spinless_z",
    "spin_sum",
    "decay_rate_lowest_order",
    "t_of_energy",
    "energy_of_t",
    "off_resonant_energies",
]

HALF = Fraction(1, 2)


def _half_integer(x) -> Fraction:
    f = Fraction(x).limit_denominator(2)
    if f != Fraction(x) or f.denominator not in (1, 2):
        raise ValueError(f"{x!r} is not an integer or half-integer")
    return f


@dataclass(frozen=True)
class HydrogenLevel:
    """Spin-coupled hydrogen state |n l j m>."""

    n: int
    l: int
    j: Fraction
    m: Fraction

    def __post_init__(self):
        object.__setattr__(self, "j", _half_integer(self.j))
        object.__setattr__(self, "m", _half_integer(self.m))
        if self.n < 1 or not 0 <= self.l < self.n:
            raise ValueError(f"invalid n={self.n}, l={self.l}")
        if abs(self.j - self.l) != HALF:
            raise ValueError(f"j={self.j} incompatible with l={self.l}")
        if abs(self.m) > self.j or (self.m - self.j).denominator != 1:
            raise ValueError(f"m={self.m} incompatible with j={self.j}")


@dataclass(frozen=True)
class TransitionSpec:
    """Data for the 1S_1/2 - 2P_j transition driven by the laser."""

    j_upper: Fraction
    gamma_j: UncertainValue
    lamb_1s: UncertainValue
    lamb_2p: UncertainValue
    l_bare: UncertainValue

    @property
    def label(self) -> str:
        return f"{self.j_upper.numerator}/{self.j_upper.denominator}"


def _check_j(j) -> Fraction:
    jj = _half_integer(j)
    if jj not in (Fraction(1, 2), Fraction(3, 2)):
        raise ValueError(f"upper level must have j = 1/2 or 3/2, got {j!r}")
    return jj


def transition(j, data: InputData | None = None) -> TransitionSpec:
    """Transition data for 2P_j from the loaded inputs."""
    jj = _check_j(j)
    data = data or InputData()
    if jj == HALF:
        gamma, l2p = data.gamma_1_2, data.lamb_2p_1_2
    else:
        gamma, l2p = data.gamma_3_2, data.lamb_2p_3_2
    l_bare = combine_linear([(1.0, l2p), (-1.0, data.lamb_1s)])
    return TransitionSpec(jj, gamma, data.lamb_1s, l2p, l_bare)


@dataclass(frozen=True)
class EnergyParameter:
    """Complex energy ``zeta`` and its dimensionless counterpart ``t``.

    ``zeta = -(Z alpha)^2 m / (2 n_ref^2 t^2)`` with ``n_ref`` the principal
    quantum number of the reference state.
    """

    zeta: complex
    t: complex
    n_ref: int
    l_ref: int

    @classmethod
    def from_energy(cls, zeta, n_ref: int, l_ref: int,
                    constants: PhysicalConstants | None = None) -> "EnergyParameter":
        return cls(complex(zeta), t_of_energy(n_ref, zeta, constants), n_ref, l_ref)

    @classmethod
    def from_t(cls, t, n_ref: int, l_ref: int,
               constants: PhysicalConstants | None = None) -> "EnergyParameter":
        return cls(energy_of_t(n_ref, t, constants), complex(t), n_ref, l_ref)


def relativistic_energy(n: int, j, constants: PhysicalConstants | None = None) -> float:
    """Order (Z alpha)^4 part of the Dirac energy, Hz."""
    c = constants or PhysicalConstants()
    jj = _half_integer(j)
    if n < 1 or not 0 < jj <= n - HALF:
        raise ValueError(f"invalid quantum numbers n={n}, j={j}")
    za4m = c.z_alpha**4 * c.electron_mass_frequency
    return -za4m / n**3 * (1.0 / float(2 * jj + 1) - 3.0 / (8.0 * n))


def dirac_energy(n: int, j, constants: PhysicalConstants | None = None,
                 include_rest_mass: bool = True) -> float:
    """Dirac energy of level (n, j) through order (Z alpha)^4, Hz.

    With ``include_rest_mass=False`` the rest energy is dropped, which keeps
    full double precision in level differences.
    """
    c = constants or PhysicalConstants()
    rel = relativistic_energy(n, j, c)
    binding = -c.binding_scale / (2.0 * n**2)
    rest = c.electron_mass_frequency if include_rest_mass else 0.0
    return rest + binding + rel


# <1S| z |2P, m_l = 0> in units of the ionic Bohr radius
_RADIAL_Z = 2**7 / 3**5 * math.sqrt(2.0)


def _spatial(component: str, m_l: int) -> complex:
    """<1S| x_i |2P, m_l> for Condon-Shortley spherical harmonics."""
    if component == "z":
        return _RADIAL_Z if m_l == 0 else 0.0
    if m_l == 0:
        return 0.0
    if component == "x":
        return -m_l * _RADIAL_Z / math.sqrt(2.0)
    if component == "y":
        return -1j * _RADIAL_Z / math.sqrt(2.0)
    raise ValueError(f"unknown component {component!r}")


def _spin_orbit_expansion(l: int, j: Fraction, m: Fraction) -> list[tuple[int, Fraction, float]]:
    """Clebsch-Gordan expansion of |l j m> into (m_l, m_s, coefficient)."""
    out = []
    denom = 2 * l + 1
    up = float((l + m + HALF) / denom)
    down = float((l - m + HALF) / denom)
    if j == l + HALF:
        terms = ((m - HALF, HALF, math.sqrt(up)), (m + HALF, -HALF, math.sqrt(down)))
    else:
        terms = ((m - HALF, HALF, -math.sqrt(down)), (m + HALF, -HALF, math.sqrt(up)))
    for m_l, m_s, coeff in terms:
        if abs(m_l) <= l and coeff != 0.0:
            out.append((int(m_l), m_s, coeff))
    return out


def dipole_component(component: str, initial: HydrogenLevel, final: HydrogenLevel) -> complex:
    """Spin-resolved dipole element <1S_1/2, m_f| x_i |2P_j, m_i>.

    ``initial`` is the 1S_1/2 state and ``final`` the 2P_j state, following
    the ordering in which the matrix element is written.
    """
    if (initial.n, initial.l, initial.j) != (1, 0, HALF) or (final.n, final.l) != (2, 1):
        raise ValueError("only <1S_1/2| x |2P_j> elements are supported")
    total = 0.0 + 0.0j
    for m_l, m_s, coeff in _spin_orbit_expansion(1, final.j, final.m):
        if m_s == initial.m:
            total += coeff * _spatial(component, m_l)
    return total


def dipole_z(initial: HydrogenLevel, final: HydrogenLevel) -> float:
    """z component of the 1S-2P_j dipole element, units of the ionic Bohr radius."""
    return dipole_component("z", initial, final).real


def dipole_spinless_z() -> float:
    """<1S| z |2P, m=0> without spin, (2^7 / 3^5) sqrt(2)."""
    return _RADIAL_Z


def spin_sum(j, m_i) -> float:
    """Sum over components and final spins of |<1S, m_f| x_i |2P_j, m_i>|^2."""
    final = HydrogenLevel(2, 1, j, m_i)
    total = 0.0
    for m_f in (HALF, -HALF):
        initial = HydrogenLevel(1, 0, HALF, m_f)
        for comp in "xyz":
            total += abs(dipole_component(comp, initial, final)) ** 2
    return total


def decay_rate_lowest_order(constants: PhysicalConstants | None = None) -> float:
    """Lowest-order 2P decay rate (2^8/3^8) alpha (Z alpha)^4 m, Hz.

    Serves only as a cross-check of the adopted measured widths; reduced-mass
    and radiative effects are absent.
    """
    c = constants or PhysicalConstants()
    return 2**8 / 3**8 * c.alpha * c.z_alpha**4 * c.electron_mass_frequency


def t_of_energy(n: int, energy, constants: PhysicalConstants | None = None) -> complex:
    """Dimensionless t = sqrt(E_n / E) for a bound-state-scale energy in Hz.

    ``E_n = -(Z alpha)^2 m / (2 n^2)`` is the Schroedinger energy of shell
    ``n``.  The principal square root is used.
    """
    if energy == 0:
        raise ValueError("energy must be nonzero")
    c = constants or PhysicalConstants()
    e_n = -c.binding_scale / (2.0 * n**2)
    return cmath.sqrt(complex(e_n / energy))


def energy_of_t(n: int, t, constants: PhysicalConstants | None = None) -> complex:
    """Inverse of :func:`t_of_energy`, zeta(t) in Hz."""
    c = constants or PhysicalConstants()
    return complex(-c.binding_scale / (2.0 * n**2 * t**2))


def off_resonant_energies(constants: PhysicalConstants | None = None) -> tuple[float, ...]:
    """Energies (E1, E2, E3, E4) at which the second-order elements are needed.

    They are the leading-order forms: the ground-state energy, shifted by
    0, +2, -1 and +1 times the resonance frequency.
    """
    c = constants or PhysicalConstants()
    ground = -0.5 * c.binding_scale
    res = 0.375 * c.binding_scale
    return (ground, ground + 2 * res, ground - res, ground + res)
