"""Incoherent resonance-fluorescence (Mollow) spectrum of a driven two-level atom.

Frequencies are in Hz and the spectral density is in 1/Hz.  Scalar helpers
use plain arithmetic, so they also accept :mod:`mpmath` numbers when extended
precision is needed.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

__all__ = [
    "DriveParams",
    "SecularComponents",
    "PeaksUnresolved",
    "spectrum_exact",
    "spectrum_secular",
    "secular_components",
    "sideband_positions_series",
    "find_peaks_numeric",
]


class PeaksUnresolved(RuntimeError):
    """The exact spectrum does not show three separated maxima."""


@dataclass(frozen=True)
class DriveParams:
    """Parameters of the driven two-level problem.

    Parameters
    ----------
    omega_rabi : float
        Rabi frequency, Hz, strictly positive.
    detuning : float
        Laser frequency minus atomic transition frequency, Hz.  When the
        transition frequency already contains the relativistic fine-structure
        energies this is the experimentally defined detuning.
    gamma : float
        Spontaneous decay rate, Hz, non-negative.
    omega_laser : float
        Laser frequency, Hz, strictly positive.
    """

    omega_rabi: float
    detuning: float
    gamma: float
    omega_laser: float

    def __post_init__(self):
        if not self.omega_rabi > 0:
            raise ValueError(f"omega_rabi must be > 0, got {self.omega_rabi!r}")
        if not self.gamma >= 0:
            raise ValueError(f"gamma must be >= 0, got {self.gamma!r}")
        if not self.omega_laser > 0:
            raise ValueError(f"omega_laser must be > 0, got {self.omega_laser!r}")

    @property
    def generalized_rabi(self):
        return (self.omega_rabi**2 + self.detuning**2) ** 0.5


@dataclass(frozen=True)
class SecularComponents:
    """Amplitudes and half-widths of the three secular Lorentzians."""

    A0: float
    Aplus: float
    Aminus: float
    Gamma0: float
    GammaPlus: float
    GammaMinus: float


def _require_decay(d: DriveParams) -> None:
    if not d.gamma > 0:
        raise ValueError("the spectrum needs gamma > 0")


def spectrum_exact(omega, d: DriveParams):
    """Exact incoherent spectrum at laser-frame frequency ``omega``.

    Parameters
    ----------
    omega : float or array_like
        Observation frequency in Hz.
    d : DriveParams

    Returns
    -------
    float or ndarray
        Spectral density in 1/Hz.
    """
    _require_decay(d)
    x2 = (np.asarray(omega, dtype=float) - d.omega_laser) ** 2
    rabi2, det2, g = d.omega_rabi**2, d.detuning**2, d.gamma
    x0 = 16.0 * (det2 + rabi2 - x2) ** 2 * x2
    x2_coef = 4.0 * (6.0 * x2**2 - 2.0 * (3.0 * det2 - rabi2) * x2 + (2.0 * det2 + rabi2) ** 2)
    x4 = 8.0 * det2 + 4.0 * rabi2 + 9.0 * x2
    denom = x0 + x2_coef * g**2 + x4 * g**4 + g**6
    prefactor = (g / np.pi) * (2.0 * g**2 + rabi2 + 2.0 * x2) / (g**2 + 2.0 * rabi2 + 4.0 * det2)
    out = prefactor * 4.0 * g * rabi2**2 / denom
    return out if np.ndim(out) else float(out)


def secular_components(d: DriveParams) -> SecularComponents:
    """Amplitudes and widths of the secular three-Lorentzian form."""
    rabi2, det2 = d.omega_rabi**2, d.detuning**2
    gen2 = rabi2 + det2
    a0 = rabi2**3 / (4 * gen2 * (gen2 + det2) ** 2)
    a_side = rabi2**2 / (8 * gen2 * (gen2 + det2))
    g0 = d.gamma * (rabi2 + 2 * det2) / (2 * gen2)
    g_side = d.gamma * (3 * rabi2 + 2 * det2) / (4 * gen2)
    return SecularComponents(a0, a_side, a_side, g0, g_side, g_side)


def spectrum_secular(omega, d: DriveParams):
    """Secular approximation: three Lorentzians at the laser and the sidebands."""
    _require_decay(d)
    c = secular_components(d)
    x = np.asarray(omega, dtype=float) - d.omega_laser
    gen = d.generalized_rabi
    out = (d.gamma / np.pi) * (
        c.Gamma0 * c.A0 / (x**2 + c.Gamma0**2)
        + c.GammaPlus * c.Aplus / ((x - gen) ** 2 + c.GammaPlus**2)
        + c.GammaMinus * c.Aminus / ((x + gen) ** 2 + c.GammaMinus**2)
    )
    return out if np.ndim(out) else float(out)


def _series_offset(d: DriveParams):
    gen = d.generalized_rabi
    ratio2 = (d.gamma / gen) ** 2
    y2 = (d.detuning / d.omega_rabi) ** 2
    second = (4 + y2) / (8 * (1 + y2))
    fourth = (70 + 8 * y2 + y2**2) / (128 * (1 + y2) ** 2)
    return gen * (1 - second * ratio2 - fourth * ratio2**2)


def sideband_positions_series(d: DriveParams):
    """Sideband maxima from the expansion through fourth order in gamma / Omega_R.

    Returns
    -------
    (omega_plus, omega_minus)
        Peak positions in Hz.

    Raises
    ------
    ValueError
        If ``gamma >= Omega_R`` where the expansion is not trusted.
    """
    if not d.gamma < d.generalized_rabi:
        raise ValueError("series requires gamma / Omega_R < 1")
    off = _series_offset(d)
    return d.omega_laser + off, d.omega_laser - off


def _slope_sign_poly(d: DriveParams):
    """Coefficients of r(s) with dS/du proportional to u * r(u**2).

    ``u`` is the offset from the laser in units of the generalized Rabi
    frequency; the positive proportionality factor is dropped.
    """
    gen = d.generalized_rabi
    a2 = (d.omega_rabi / gen) ** 2
    b2 = (d.detuning / gen) ** 2
    g2 = (d.gamma / gen) ** 2
    c = a2 + b2
    # denominator polynomial q(s) = q3 s^3 + q2 s^2 + q1 s + q0
    q3 = 16
    q2 = -32 * c + 24 * g2
    q1 = 16 * c**2 - 8 * (3 * b2 - a2) * g2 + 9 * g2**2
    q0 = 4 * (2 * b2 + a2) ** 2 * g2 + (8 * b2 + 4 * a2) * g2**2 + g2**3
    # numerator n(s) = 2 s + n0
    n0 = 2 * g2 + a2
    return (-4 * q3, -(2 * q2 + 3 * q3 * n0), -2 * q2 * n0, 2 * q0 - q1 * n0)


def find_peaks_numeric(d: DriveParams, rtol: float = 1e-12, points_per_window: int = 1000,
                       dps: int | None = None):
    """Locate the three maxima of :func:`spectrum_exact`.

    The slope of the spectrum is sampled on a grid spanning
    ``omega_laser +- 2 Omega_R``; every change of sign from rising to falling
    is refined by bisection.  The slope is evaluated from its exact
    polynomial numerator, so the refinement is not limited by
    finite-difference noise.

    Parameters
    ----------
    d : DriveParams
    rtol : float
        Bisection stops when the bracket is below ``rtol * Omega_R``.
    points_per_window : int
        Grid density per unit of ``Omega_R``.
    dps : int, optional
        If given, evaluate in :mod:`mpmath` with this many decimal digits and
        return mpmath numbers.  Needed for ``rtol`` below about 1e-15.

    Returns
    -------
    (omega_plus, omega_0, omega_minus)
        Positions in Hz.

    Raises
    ------
    PeaksUnresolved
        If three maxima cannot be bracketed.
    """
    _require_decay(d)
    if dps is not None:
        import mpmath

        ctx = mpmath.mp.clone()
        ctx.dps = dps
        conv = ctx.mpf
        d = DriveParams(conv(d.omega_rabi), conv(d.detuning), conv(d.gamma), conv(d.omega_laser))
    else:
        conv = float
    r3, r2, r1, r0 = _slope_sign_poly(d)

    def slope(u):
        s = u * u
        return u * (((r3 * s + r2) * s + r1) * s + r0)

    # an even number of nodes keeps u = 0 off the grid
    count = 4 * points_per_window
    grid = [conv(-2) + conv(4) * k / (count - 1) for k in range(count)]
    values = [slope(u) for u in grid]
    maxima = []
    for k in range(count - 1):
        if values[k] > 0 and values[k + 1] <= 0:
            lo, hi = grid[k], grid[k + 1]
            while hi - lo > rtol:
                mid = (lo + hi) / 2
                if slope(mid) > 0:
                    lo = mid
                else:
                    hi = mid
            maxima.append((lo + hi) / 2)
    if len(maxima) != 3:
        raise PeaksUnresolved(f"expected 3 spectral maxima, found {len(maxima)}")
    gen = d.generalized_rabi
    low, mid, high = maxima
    return (d.omega_laser + gen * high, d.omega_laser + gen * mid, d.omega_laser + gen * low)
