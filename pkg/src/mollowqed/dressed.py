"""Dressed-state algebra of the laser-driven two-level atom."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Literal

__all__ = [
    "MixingAngle",
    "DressedLevel",
    "generalized_rabi",
    "mixing_angle",
    "dressed_levels",
    "quasi_energies",
    "match_classical",
    "match_quantum",
]


def generalized_rabi(omega_rabi: float, detuning: float) -> float:
    """Generalized Rabi frequency sqrt(Omega^2 + Delta^2)."""
    if not omega_rabi > 0:
        raise ValueError("omega_rabi must be > 0")
    return math.hypot(omega_rabi, detuning)


@dataclass(frozen=True)
class MixingAngle:
    """Dressed-state mixing angle.

    The branch is fixed by requiring simultaneously
    ``cos(2 theta) = -Delta / Omega_R`` and ``sin(2 theta) = Omega / Omega_R``,
    which places ``theta`` in the open interval (0, pi/2).
    """

    theta: float

    @property
    def cos2(self) -> float:
        return math.cos(2 * self.theta)

    @property
    def sin2(self) -> float:
        return math.sin(2 * self.theta)


def mixing_angle(omega_rabi: float, detuning: float) -> MixingAngle:
    """Mixing angle for Rabi frequency ``omega_rabi`` and detuning ``detuning``."""
    if not omega_rabi > 0:
        raise ValueError("omega_rabi must be > 0")
    # atan2 of (sin 2theta, cos 2theta) lands in (0, pi) for omega_rabi > 0
    return MixingAngle(0.5 * math.atan2(omega_rabi, -detuning))


@dataclass(frozen=True)
class DressedLevel:
    """One dressed state |branch, n> = c_e |e, n> + c_g |g, n+1>."""

    branch: Literal["+", "-"]
    n_photons: int
    energy: float
    c_e: float
    c_g: float


def quasi_energies(n: int, omega_laser: float, omega_eg: float, omega_rabi: float,
                   detuning: float) -> tuple[float, float]:
    """Quasi-energies (E_plus, E_minus) of the dressed pair with ``n`` photons.

    Uses the semiclassically matched Rabi frequency for every ``n``.
    """
    if n < 0:
        raise ValueError("photon number must be >= 0")
    centre = (n + 0.5) * omega_laser + 0.5 * omega_eg
    half = 0.5 * generalized_rabi(omega_rabi, detuning)
    return centre + half, centre - half


def dressed_levels(n: int, omega_laser: float, omega_eg: float, omega_rabi: float,
                   detuning: float) -> tuple[DressedLevel, DressedLevel]:
    """Both dressed levels of manifold ``n`` with their state coefficients."""
    e_plus, e_minus = quasi_energies(n, omega_laser, omega_eg, omega_rabi, detuning)
    th = mixing_angle(omega_rabi, detuning).theta
    c, s = math.cos(th), math.sin(th)
    return (DressedLevel("+", n, e_plus, c, s), DressedLevel("-", n, e_minus, -s, c))


def match_classical(n: int, field_per_photon: float) -> float:
    """Classical amplitude 2 sqrt(n + 1) E_photon equivalent to an n-photon field."""
    if n < 0:
        raise ValueError("photon number must be >= 0")
    return 2.0 * math.sqrt(n + 1) * field_per_photon


def match_quantum(n: int, classical_field: float) -> float:
    """Inverse of :func:`match_classical`: field per photon."""
    if n < 0:
        raise ValueError("photon number must be >= 0")
    return classical_field / (2.0 * math.sqrt(n + 1))
