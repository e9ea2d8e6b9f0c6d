"""Relativistic and radiative corrections to the Mollow sideband positions.

Each correction either displaces the detuning, ``Delta -> Delta - p``
(detuning type, ``p`` in Hz), or rescales the Rabi frequency,
``Omega -> Omega (1 + rho)`` (Rabi type, ``rho`` dimensionless).  The
resulting shift of the upper sideband is evaluated in closed "summed" form,
the shift of the lower sideband is its negative.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Literal

from . import green
from .constants import InputData, UncertainValue, resonance_frequency
from .hydrogen import _check_j, relativistic_energy, transition
from .spectrum import DriveParams

__all__ = [
    "CorrectionChannel",
    "OffResonantConstant",
    "BranchValidationError",
    "summed_detuning_shift",
    "summed_rabi_shift",
    "first_order_detuning_shift",
    "first_order_rabi_shift",
    "detuning_channel",
    "rabi_channel",
    "relativistic_detuning",
    "bare_lamb",
    "bloch_siegert",
    "bloch_siegert_exact",
    "off_resonant_constant",
    "off_resonant",
    "relativistic_dipole",
    "field_configuration",
    "field_configuration_ratio",
    "c_term",
    "tdm_radiative",
    "tdm_coefficients",
    "secular_parameter",
    "secular_correction",
    "imaginary_sideband_width",
    "all_channels",
]

ChannelId = Literal["REL", "LAMB", "BS", "OR", "R_DIPOLE", "FIELD", "CTERM", "TDM", "SECULAR"]

# nonlogarithmic vertex plus vacuum-polarisation coefficients, in units alpha (Z alpha)^2 / pi
_TDM_NONLOG = {Fraction(1, 2): UncertainValue(9.2, 1.8), Fraction(3, 2): UncertainValue(9.3, 1.9)}


class BranchValidationError(ArithmeticError):
    """Neither square-root branch gives a decaying off-resonant constant."""


# ---------------------------------------------------------------------------
# shift arithmetic


def summed_detuning_shift(d: DriveParams, p: float) -> float:
    """sqrt(Omega^2 + (Delta - p)^2) - sqrt(Omega^2 + Delta^2), free of cancellation."""
    gen = math.hypot(d.omega_rabi, d.detuning)
    moved = math.hypot(d.omega_rabi, d.detuning - p)
    return p * (p - 2 * d.detuning) / (moved + gen)


def summed_rabi_shift(d: DriveParams, rho: float) -> float:
    """sqrt(Omega^2 (1 + rho)^2 + Delta^2) - sqrt(Omega^2 + Delta^2)."""
    gen = math.hypot(d.omega_rabi, d.detuning)
    moved = math.hypot(d.omega_rabi * (1 + rho), d.detuning)
    return d.omega_rabi**2 * rho * (2 + rho) / (moved + gen)


def first_order_detuning_shift(d: DriveParams, p: float) -> float:
    """Leading term -Delta p / Omega_R of :func:`summed_detuning_shift`."""
    return -d.detuning / math.hypot(d.omega_rabi, d.detuning) * p


def first_order_rabi_shift(d: DriveParams, rho: float) -> float:
    """Leading term Omega^2 rho / Omega_R of :func:`summed_rabi_shift`."""
    return d.omega_rabi**2 / math.hypot(d.omega_rabi, d.detuning) * rho


@dataclass(frozen=True)
class CorrectionChannel:
    """One correction channel and the shift it produces on the upper sideband.

    Attributes
    ----------
    id : str
        Channel identifier.
    kind : {"detuning", "rabi"}
    parameter : UncertainValue
        Detuning displacement in Hz or relative Rabi modification.
    shift_plus : UncertainValue
        Summed shift of the upper sideband, Hz.
    first_order : float
        Shift of the upper sideband to first order in the parameter, Hz.
    j : Fraction or None
        Upper fine-structure level, None when the channel is j independent.
    in_aggregate : bool
        Whether the channel enters the corrected generalized Rabi frequency.
    valid : bool
        False when the drive leaves the regime the parameter was derived for.
    """

    id: ChannelId
    kind: Literal["detuning", "rabi"]
    parameter: UncertainValue
    shift_plus: UncertainValue
    first_order: float
    j: Fraction | None = None
    in_aggregate: bool = True
    valid: bool = True

    @property
    def shift_minus(self) -> UncertainValue:
        return -self.shift_plus


def detuning_channel(cid: ChannelId, d: DriveParams, p: UncertainValue, **kw) -> CorrectionChannel:
    """Build a detuning-type channel with first-order uncertainty propagation."""
    moved = math.hypot(d.omega_rabi, d.detuning - p.value)
    slope = -(d.detuning - p.value) / moved
    shift = UncertainValue(summed_detuning_shift(d, p.value), abs(slope) * p.sigma)
    return CorrectionChannel(cid, "detuning", p, shift, first_order_detuning_shift(d, p.value), **kw)


def rabi_channel(cid: ChannelId, d: DriveParams, rho: UncertainValue, **kw) -> CorrectionChannel:
    """Build a Rabi-type channel with first-order uncertainty propagation."""
    scaled = d.omega_rabi * (1 + rho.value)
    slope = d.omega_rabi * scaled / math.hypot(scaled, d.detuning)
    shift = UncertainValue(summed_rabi_shift(d, rho.value), abs(slope) * rho.sigma)
    return CorrectionChannel(cid, "rabi", rho, shift, first_order_rabi_shift(d, rho.value), **kw)


def _data(data: InputData | None) -> InputData:
    return data or InputData()


# ---------------------------------------------------------------------------
# detuning-type channels


def relativistic_detuning(j, d: DriveParams, data: InputData | None = None) -> CorrectionChannel:
    """Fine-structure part of the 2P_j - 1S energy difference.

    The parameter is the order (Z alpha)^4 Dirac energy of 2P_j minus that
    of 1S_1/2, with an uncertainty of relative order (Z alpha)^2.  The
    channel is excluded from the aggregate because an experimental detuning
    is measured from the fine-structure-resolved transition.
    """
    jj = _check_j(j)
    c = _data(data).constants
    p = relativistic_energy(2, jj, c) - relativistic_energy(1, Fraction(1, 2), c)
    return detuning_channel("REL", d, UncertainValue(p, c.z_alpha**2 * abs(p)), j=jj,
                            in_aggregate=False)


def bare_lamb(j, d: DriveParams, data: InputData | None = None) -> CorrectionChannel:
    """Difference of the 2P_j and 1S Lamb shifts as a detuning displacement."""
    jj = _check_j(j)
    tr = transition(jj, _data(data))
    return detuning_channel("LAMB", d, tr.l_bare, j=jj)


def bloch_siegert(d: DriveParams, data: InputData | None = None) -> CorrectionChannel:
    """Counter-rotating (Bloch-Siegert) displacement Omega^2 / (4 omega_R).

    The uncertainty is the neglected relative order max(|Delta|, Omega) / omega_L.
    The channel is flagged invalid once that ratio exceeds 1e-2.
    """
    res = resonance_frequency(_data(data).constants)
    p = d.omega_rabi**2 / (4 * res)
    ratio = max(abs(d.detuning), d.omega_rabi) / d.omega_laser
    return detuning_channel("BS", d, UncertainValue(p, abs(p) * ratio), valid=ratio < 1e-2)


def bloch_siegert_exact(d: DriveParams) -> float:
    """Second-order Bloch-Siegert shift of the upper sideband without expansion.

    Evaluates the dressed-level shifts for both branches and returns their
    difference, which reduces to ``-Delta / Omega_R * Omega^2 / (4 omega_L)``
    for small ``Omega_R / omega_L``.
    """
    rabi2, det = d.omega_rabi**2, d.detuning
    gen = math.hypot(d.omega_rabi, det)
    level = (rabi2 / (8 * gen) * (2 * det**2 + rabi2 + 4 * det * d.omega_laser)
             / (det**2 + rabi2 - 4 * d.omega_laser**2))
    return 2 * level


@dataclass(frozen=True)
class OffResonantConstant:
    """Off-resonant stimulated constant D, split into parts, in 1/Hz.

    ``branch`` records which square-root branch of the complex energy
    parameter produced a negative imaginary part.
    """

    real: UncertainValue
    imag: UncertainValue
    branch: Literal["principal", "conjugate"]
    pole: str

    @property
    def value(self) -> complex:
        return complex(self.real.value, self.imag.value)


@lru_cache(maxsize=None)
def _dimensionless_d(pole: str) -> tuple[complex, str]:
    value = green.off_resonant_dimensionless(pole)
    if value.imag < 0:
        return value, "principal"
    value = green.off_resonant_dimensionless(pole, conjugate_branch=True)
    if value.imag < 0:
        return value, "conjugate"
    raise BranchValidationError("no branch gives a negative imaginary part for D")


def off_resonant_constant(data: InputData | None = None,
                          pole: green.PoleConvention = "resonant_term") -> OffResonantConstant:
    """D in 1/Hz from the reduced second-order matrix elements.

    The adopted uncertainties are those of the inputs file, expressed in
    units of the inverse resonance frequency; they account for the
    approximate energies at which the elements are evaluated.
    """
    dd = _data(data)
    value, branch = _dimensionless_d(pole)
    scale = dd.constants.binding_scale
    res = resonance_frequency(dd.constants)
    real = UncertainValue(value.real / scale, dd.off_resonant_sigma_real / res)
    imag = UncertainValue(value.imag / scale, dd.off_resonant_sigma_imag / res)
    return OffResonantConstant(real, imag, branch, pole)


def off_resonant(d: DriveParams, data: InputData | None = None,
                 pole: green.PoleConvention = "resonant_term"
                 ) -> tuple[CorrectionChannel, OffResonantConstant, float]:
    """Off-resonant stimulated shift, the constant D and the ionization rate.

    Returns
    -------
    channel : CorrectionChannel
        Detuning type with ``p = Re(D) Omega^2``.
    constant : OffResonantConstant
    ionization : float
        One-photon ionization rate ``|Im(D)| Omega^2`` in Hz.
    """
    const = off_resonant_constant(data, pole)
    rabi2 = d.omega_rabi**2
    p = const.real.scaled(rabi2)
    res = resonance_frequency(_data(data).constants)
    valid = max(abs(d.detuning), d.omega_rabi) / res < 1e-2
    channel = detuning_channel("OR", d, p, valid=valid)
    return channel, const, abs(const.imag.value) * rabi2


def imaginary_sideband_width(d: DriveParams, data: InputData | None = None,
                             pole: green.PoleConvention = "resonant_term") -> float:
    """Sideband broadening (|Delta| / Omega_R) |Im D| Omega^2, Hz; informational only."""
    const = off_resonant_constant(data, pole)
    gen = math.hypot(d.omega_rabi, d.detuning)
    return abs(d.detuning) / gen * abs(const.imag.value) * d.omega_rabi**2


# ---------------------------------------------------------------------------
# Rabi-type parameters


def relativistic_dipole(j, data: InputData | None = None) -> UncertainValue:
    """Relative Rabi modification from relativistic dipole corrections, -E_j."""
    jj = _check_j(j)
    za2 = _data(data).constants.z_alpha**2
    ln2, ln3 = math.log(2), math.log(3)
    if jj == Fraction(1, 2):
        coeff = 13 / 32 + 1.5 * ln2 - ln3
    else:
        coeff = 31 / 96 + 1.25 * ln2 - 0.75 * ln3
    rho = -za2 * coeff
    return UncertainValue(rho, za2 * abs(rho))


def field_configuration_ratio() -> Fraction:
    """<1S| z x^2 |2P, m=0> / <1S| z |2P, m=0> in units of a_B^2.

    Both elements factor into a radial integral of r^k exp(-3 r / 2) and an
    angular average; the ratio is rational.
    """
    radial = Fraction(math.factorial(6), 1) / Fraction(3, 2) ** 7
    radial_dipole = Fraction(math.factorial(4), 1) / Fraction(3, 2) ** 5
    # angular parts: sqrt(3)/15 against 1/sqrt(3), ratio 3/15
    return radial / radial_dipole * Fraction(3, 15)


def field_configuration(data: InputData | None = None, check: bool = True) -> UncertainValue:
    """Relative Rabi modification -F = -(Z alpha)^2 / 16 at a standing-wave anti-node.

    With ``check`` the value is rebuilt from the long-wavelength coupling,
    k^2/6 times :func:`field_configuration_ratio` with k a_B = (3/8) Z alpha.
    """
    za = _data(data).constants.z_alpha
    f = za**2 / 16
    if check:
        rebuilt = (0.375 * za) ** 2 / 6 * float(field_configuration_ratio())
        if not math.isclose(rebuilt, f, rel_tol=1e-12, abs_tol=1e-300):
            raise ArithmeticError("field-configuration factor inconsistent")
    return UncertainValue(-f, za**2 * f)


def c_term(j, data: InputData | None = None, with_estimate: bool = True) -> UncertainValue:
    """Relative Rabi modification -C_j from the dynamical radiative C-term.

    ``C_j = alpha (Z alpha)^2 (5 / 4 pi) (ln[(Z alpha)^-2] - (2 +- 2))``; the
    bracketed constant is an estimate of the unknown nonlogarithmic part and
    supplies the uncertainty.  It is j independent at this order.
    """
    _check_j(j)
    c = _data(data).constants
    if c.z_alpha == 0:
        # (Z alpha)^2 ln (Z alpha)^-2 vanishes in the limit
        return UncertainValue(0.0, 0.0)
    scale = c.alpha * c.z_alpha**2 * 5 / (4 * math.pi)
    log = math.log(c.z_alpha**-2)
    if with_estimate:
        value, sigma = scale * (log - 2), scale * 2
    else:
        value, sigma = scale * log, 0.0
    return UncertainValue(-value, sigma)


def tdm_coefficients(j, data: InputData | None = None) -> tuple[float, UncertainValue]:
    """(c1, c2) of the radiative dipole correction in units of alpha (Z alpha)^2.

    ``c1`` multiplies ln[(Z alpha)^-2]; ``c2`` is the nonlogarithmic constant.
    """
    jj = _check_j(j)
    c1 = (4 / 3 * math.log(4 / 3) + 131 / 36) / math.pi
    return c1, _TDM_NONLOG[jj].scaled(-1 / math.pi)


def tdm_radiative(j, data: InputData | None = None) -> UncertainValue:
    """Relative Rabi modification A_j from radiative transition-dipole corrections."""
    c = _data(data).constants
    c1, c2 = tdm_coefficients(j, data)
    scale = c.alpha * c.z_alpha**2
    if scale == 0:
        return UncertainValue(0.0, 0.0)
    return UncertainValue(scale * (c1 * math.log(c.z_alpha**-2) + c2.value), scale * c2.sigma)


def secular_parameter(d: DriveParams, full: bool = False) -> float:
    """S with (Gamma/Omega)^2 / 2 by default, the detuning-dependent form if ``full``."""
    ratio2 = (d.gamma / d.omega_rabi) ** 2
    if not full:
        return 0.5 * ratio2
    y2 = (d.detuning / d.omega_rabi) ** 2
    return (4 + y2) / (8 * (1 + y2)) * ratio2


def secular_correction(d: DriveParams) -> UncertainValue:
    """Relative Rabi modification -S from corrections to the secular approximation.

    The uncertainty adds the difference between the detuning-dependent and
    leading forms to the size of the fourth-order term.
    """
    lead = secular_parameter(d)
    full = secular_parameter(d, full=True)
    gen = math.hypot(d.omega_rabi, d.detuning)
    y2 = (d.detuning / d.omega_rabi) ** 2
    fourth = ((70 + 8 * y2 + y2**2) / (128 * (1 + y2) ** 2)
              * d.gamma**4 / (gen**2 * d.omega_rabi**2))
    return UncertainValue(-lead, abs(full - lead) + fourth)


# ---------------------------------------------------------------------------


def all_channels(j, d: DriveParams, data: InputData | None = None,
                 pole: green.PoleConvention = "resonant_term") -> list[CorrectionChannel]:
    """Every channel for transition ``j`` in display order, REL first."""
    jj = _check_j(j)
    dd = _data(data)
    validity_secular = abs(d.detuning) < d.omega_rabi
    return [
        relativistic_detuning(jj, d, dd),
        bare_lamb(jj, d, dd),
        bloch_siegert(d, dd),
        off_resonant(d, dd, pole)[0],
        rabi_channel("R_DIPOLE", d, relativistic_dipole(jj, dd), j=jj),
        rabi_channel("FIELD", d, field_configuration(dd)),
        rabi_channel("CTERM", d, c_term(jj, dd), j=jj),
        rabi_channel("TDM", d, tdm_radiative(jj, dd), j=jj),
        rabi_channel("SECULAR", d, secular_correction(d), valid=validity_secular),
    ]
