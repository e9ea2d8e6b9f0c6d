"""Aggregate all corrections into the corrected generalized Rabi frequency."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from . import green
from .constants import InputData, UncertainValue, combine_linear, resonance_frequency
from .corrections import (
    CorrectionChannel,
    OffResonantConstant,
    all_channels,
    imaginary_sideband_width,
    off_resonant,
)
from .dressed import MixingAngle, mixing_angle
from .hydrogen import HydrogenLevel, TransitionSpec, _check_j, dipole_z, transition
from .spectrum import DriveParams

__all__ = [
    "CorrectionBreakdown",
    "TableRow",
    "drive_for",
    "aggregate",
    "prediction_without_c",
    "headline_shift",
    "first_order_total",
    "corrected_mixing_angle",
    "table_one",
    "field_coefficient",
    "h_from_field",
    "TABLE_CHANNELS",
]

DETUNING_CHANNELS = ("LAMB", "BS", "OR")
RABI_CHANNELS = ("R_DIPOLE", "FIELD", "CTERM", "TDM", "SECULAR")
TABLE_CHANNELS = ("LAMB", "BS", "OR", "R_DIPOLE", "FIELD", "CTERM", "TDM", "SECULAR")


@dataclass(frozen=True)
class CorrectionBreakdown:
    """Every correction for one transition and drive, with the aggregate result.

    Attributes
    ----------
    delta_rad : UncertainValue
        Total detuning displacement, Hz.
    omega_hat_rad : UncertainValue
        Total relative Rabi modification.
    omega_c : UncertainValue
        Corrected generalized Rabi frequency, Hz.
    omega_no_c : UncertainValue
        The same with the C-term switched off.
    bare : float
        Uncorrected generalized Rabi frequency, Hz.
    """

    transition: TransitionSpec
    drive: DriveParams
    channels: tuple[CorrectionChannel, ...]
    delta_rad: UncertainValue
    omega_hat_rad: UncertainValue
    omega_c: UncertainValue
    omega_no_c: UncertainValue
    bare: float
    off_resonant: OffResonantConstant
    ionization: float
    imaginary_width: float

    def channel(self, cid: str) -> CorrectionChannel:
        for ch in self.channels:
            if ch.id == cid:
                return ch
        raise KeyError(cid)

    @property
    def headline(self) -> UncertainValue:
        return UncertainValue(self.omega_c.value - self.bare, self.omega_c.sigma)

    @property
    def intensity_displacement(self) -> float:
        """Bloch-Siegert plus off-resonant detuning displacement, Hz."""
        return self.channel("BS").parameter.value + self.channel("OR").parameter.value


def drive_for(j, h: float, delta_over_gamma: float, data: InputData | None = None) -> DriveParams:
    """Drive with Omega = h Gamma_j and Delta = (Delta/Gamma) Gamma_j near resonance."""
    if not h > 0:
        raise ValueError("h must be > 0")
    dd = data or InputData()
    gamma = transition(j, dd).gamma_j.value
    detuning = delta_over_gamma * gamma
    laser = resonance_frequency(dd.constants) + dd.hyperfine_shift + detuning
    return DriveParams(h * gamma, detuning, gamma, laser)


def _corrected(d: DriveParams, delta_rad: UncertainValue, omega_hat: UncertainValue,
               detuning_params, rabi_params) -> UncertainValue:
    scaled = d.omega_rabi * (1 + omega_hat.value)
    shifted = d.detuning - delta_rad.value
    value = math.hypot(scaled, shifted)
    d_hat = d.omega_rabi * scaled / value
    d_rad = -shifted / value
    sigma_terms = [(d_rad, p) for p in detuning_params] + [(d_hat, r) for r in rabi_params]
    return UncertainValue(value, combine_linear(sigma_terms).sigma)


def aggregate(j, d: DriveParams, data: InputData | None = None,
              pole: green.PoleConvention = "resonant_term") -> CorrectionBreakdown:
    """Collect all channels and evaluate the corrected generalized Rabi frequency.

    The detuning displacement sums the Lamb, Bloch-Siegert and off-resonant
    parameters; the relative Rabi modification sums the dipole, field,
    C-term, radiative dipole and secular parameters.  The fine-structure
    channel is reported but not included.
    """
    jj = _check_j(j)
    dd = data or InputData()
    channels = tuple(all_channels(jj, d, dd, pole))
    by_id = {ch.id: ch for ch in channels}
    det_params = [by_id[c].parameter for c in DETUNING_CHANNELS]
    rabi_params = [by_id[c].parameter for c in RABI_CHANNELS]
    rabi_no_c = [by_id[c].parameter for c in RABI_CHANNELS if c != "CTERM"]
    delta_rad = combine_linear((1.0, p) for p in det_params)
    omega_hat = combine_linear((1.0, r) for r in rabi_params)
    omega_hat_no_c = combine_linear((1.0, r) for r in rabi_no_c)
    omega_c = _corrected(d, delta_rad, omega_hat, det_params, rabi_params)
    omega_no_c = _corrected(d, delta_rad, omega_hat_no_c, det_params, rabi_no_c)
    _, const, ionization = off_resonant(d, dd, pole)
    return CorrectionBreakdown(
        transition=transition(jj, dd),
        drive=d,
        channels=channels,
        delta_rad=delta_rad,
        omega_hat_rad=omega_hat,
        omega_c=omega_c,
        omega_no_c=omega_no_c,
        bare=math.hypot(d.omega_rabi, d.detuning),
        off_resonant=const,
        ionization=ionization,
        imaginary_width=imaginary_sideband_width(d, dd, pole),
    )


def prediction_without_c(j, d: DriveParams, data: InputData | None = None,
                         pole: green.PoleConvention = "resonant_term") -> UncertainValue:
    """Corrected generalized Rabi frequency with the C-term set to zero."""
    return aggregate(j, d, data, pole).omega_no_c


def headline_shift(j, d: DriveParams, data: InputData | None = None,
                   pole: green.PoleConvention = "resonant_term") -> UncertainValue:
    """Displacement of the upper sideband, corrected minus bare generalized Rabi frequency."""
    return aggregate(j, d, data, pole).headline


def first_order_total(b: CorrectionBreakdown) -> float:
    """Total upper-sideband shift to first order in all parameters, Hz."""
    d = b.drive
    gen = math.hypot(d.omega_rabi, d.detuning)
    return (-d.detuning / gen * b.delta_rad.value
            + d.omega_rabi**2 / gen * b.omega_hat_rad.value)


def corrected_mixing_angle(b: CorrectionBreakdown) -> MixingAngle:
    """Mixing angle for the corrected Rabi frequency and detuning."""
    d = b.drive
    return mixing_angle(d.omega_rabi * (1 + b.omega_hat_rad.value), d.detuning - b.delta_rad.value)


@dataclass(frozen=True)
class TableRow:
    """One upper-sideband shift of the summary table, Hz."""

    channel: str
    j: Fraction
    shift: UncertainValue


def table_one(h: float, delta_over_gamma: float, data: InputData | None = None,
              pole: green.PoleConvention = "resonant_term") -> list[TableRow]:
    """Summed upper-sideband shifts of the eight aggregated channels for both transitions.

    Rows are ordered by channel, j = 1/2 before j = 3/2.
    """
    per_j = {}
    for j in (Fraction(1, 2), Fraction(3, 2)):
        d = drive_for(j, h, delta_over_gamma, data)
        per_j[j] = {ch.id: ch for ch in all_channels(j, d, data, pole)}
    return [TableRow(cid, j, per_j[j][cid].shift_plus)
            for cid in TABLE_CHANNELS for j in (Fraction(1, 2), Fraction(3, 2))]


def field_coefficient(j, data: InputData | None = None, angular: bool = True) -> float:
    """h per unit field amplitude, in (V/m)^-1.

    The Rabi frequency is ``e |<1S_1/2, 1/2| z |2P_j, 1/2>| E / hbar``, an
    angular frequency, divided by the adopted width Gamma_j.  With
    ``angular=False`` it is converted to an ordinary frequency first.
    """
    jj = _check_j(j)
    dd = data or InputData()
    c = dd.constants
    dipole = abs(dipole_z(HydrogenLevel(1, 0, Fraction(1, 2), Fraction(1, 2)),
                          HydrogenLevel(2, 1, jj, Fraction(1, 2)))) * c.bohr_radius_z
    rabi_per_field = c.elementary_charge * dipole / c.hbar
    if not angular:
        rabi_per_field /= 2 * math.pi
    return rabi_per_field / transition(jj, dd).gamma_j.value


def h_from_field(j, field: float, data: InputData | None = None, angular: bool = True) -> float:
    """Dimensionless drive strength h = Omega / Gamma_j for a standing-wave amplitude in V/m."""
    if field < 0:
        raise ValueError("field amplitude must be >= 0")
    return field_coefficient(j, data, angular) * field
