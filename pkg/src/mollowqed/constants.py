"""Physical constants, unit conventions and first-order uncertainty arithmetic.

Every energy in this package is an ordinary frequency in Hz (energy divided
by Planck's constant).  The electron mass enters only through
``electron_mass_frequency`` (m c^2 / h).
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass, field, fields, replace
from importlib import resources
from pathlib import Path
from typing import Iterable, Mapping

__all__ = [
    "UncertainValue",
    "combine_linear",
    "PhysicalConstants",
    "InputData",
    "ConfigError",
    "load_config",
    "parse_config_text",
    "default_config",
    "resonance_frequency",
    "CONSTANTS_ENV_VAR",
]

CONSTANTS_ENV_VAR = "MOLLOWQED_CONSTANTS"


class ConfigError(ValueError):
    """Raised for malformed or incomplete constants files."""


@dataclass(frozen=True)
class UncertainValue:
    """Real number with a one-sigma uncertainty.

    Parameters
    ----------
    value : float
        Central value.
    sigma : float
        Standard uncertainty in the same unit, never negative.
    """

    value: float
    sigma: float = 0.0

    def __post_init__(self):
        if not self.sigma >= 0.0:
            raise ValueError(f"sigma must be non-negative, got {self.sigma!r}")

    def __neg__(self) -> "UncertainValue":
        return UncertainValue(-self.value, self.sigma)

    def scaled(self, factor: float) -> "UncertainValue":
        """Return ``factor * self`` with ``sigma`` scaled by ``|factor|``."""
        return UncertainValue(factor * self.value, abs(factor) * self.sigma)

    @property
    def interval(self) -> tuple[float, float]:
        return (self.value - self.sigma, self.value + self.sigma)

    def __str__(self) -> str:
        return f"{self.value:.12g} +- {self.sigma:.3g}"


def combine_linear(terms: Iterable[tuple[float, UncertainValue]]) -> UncertainValue:
    """Linear combination of independent uncertain values.

    Parameters
    ----------
    terms : iterable of (coefficient, UncertainValue)
        The value is ``sum(c * x.value)``; the uncertainty adds the
        contributions ``c * x.sigma`` in quadrature.

    Returns
    -------
    UncertainValue
    """
    value = 0.0
    parts = []
    for coeff, x in terms:
        value += coeff * x.value
        parts.append(coeff * x.sigma)
    # hypot scales internally, so tiny or huge contributions neither underflow nor overflow
    return UncertainValue(value, math.hypot(*parts))


@dataclass(frozen=True)
class PhysicalConstants:
    """Fundamental constants in the package's unit convention.

    ``electron_mass_frequency`` is m c^2 / h in Hz.  The SI entries are used
    only to convert laser fields in V/m into Rabi frequencies.
    """

    alpha: float = 7.2973525693e-3
    nuclear_charge: int = 1
    electron_mass_frequency: float = 1.2355899638e20
    elementary_charge: float = 1.602176634e-19
    hbar: float = 1.054571817e-34
    bohr_radius: float = 5.29177210903e-11
    # the electron charge is q = -|q|; recorded for documentation only
    charge_sign: int = -1

    @property
    def z_alpha(self) -> float:
        return self.nuclear_charge * self.alpha

    @property
    def binding_scale(self) -> float:
        """(Z alpha)^2 m in Hz, twice the hydrogenic ground-state binding."""
        return self.z_alpha**2 * self.electron_mass_frequency

    @property
    def bohr_radius_z(self) -> float:
        """Bohr radius of the hydrogenic ion in metres, a0 / Z."""
        return self.bohr_radius / self.nuclear_charge


def resonance_frequency(constants: PhysicalConstants | None = None) -> float:
    """Gross-structure 1S-2P resonance, (3/8)(Z alpha)^2 m, in Hz."""
    c = constants or PhysicalConstants()
    return 0.375 * c.binding_scale


@dataclass(frozen=True)
class InputData:
    """Measured inputs taken from the literature, with uncertainties.

    Widths and Lamb shifts are ordinary frequencies in Hz.  The two
    off-resonant sigmas are in units of the inverse resonance frequency.
    """

    constants: PhysicalConstants = field(default_factory=PhysicalConstants)
    gamma_1_2: UncertainValue = UncertainValue(99.70942e6, 10.0)
    gamma_3_2: UncertainValue = UncertainValue(99.70942e6, 10.0)
    lamb_1s: UncertainValue = UncertainValue(8172811e3, 32e3)
    lamb_2p_1_2: UncertainValue = UncertainValue(-12835.99e3, 0.08e3)
    lamb_2p_3_2: UncertainValue = UncertainValue(12517.46e3, 0.08e3)
    off_resonant_sigma_real: float = 3e-4
    off_resonant_sigma_imag: float = 6e-6
    # optional additive hyperfine shift on the transition frequency
    hyperfine_shift: float = 0.0


_CONSTANT_KEYS = {f.name for f in fields(PhysicalConstants)} - {"charge_sign"}
_UNCERTAIN_KEYS = {"gamma_1_2", "gamma_3_2", "lamb_1s", "lamb_2p_1_2", "lamb_2p_3_2"}
_PLAIN_KEYS = {"off_resonant_sigma_real", "off_resonant_sigma_imag", "hyperfine_shift"}


def _parse_number(text: str, key: str, lineno: int) -> float:
    try:
        return float(text)
    except ValueError:
        raise ConfigError(f"line {lineno}: cannot parse number {text!r} for {key!r}") from None


def parse_config_text(text: str, base: InputData | None = None) -> InputData:
    """Apply ``key = value`` assignments to ``base`` (defaults if omitted).

    Uncertain quantities accept ``value +- sigma``; a bare value keeps the
    previous sigma.  Unknown keys are an error.
    """
    data = base or InputData()
    const_updates: dict[str, float | int] = {}
    updates: dict[str, object] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"line {lineno}: expected 'key = value', got {raw!r}")
        key, rhs = (s.strip() for s in line.split("=", 1))
        if key in _CONSTANT_KEYS:
            num = _parse_number(rhs, key, lineno)
            if key == "nuclear_charge":
                if num != int(num) or num < 1:
                    raise ConfigError(f"line {lineno}: nuclear_charge must be a positive integer")
                num = int(num)
            const_updates[key] = num
        elif key in _UNCERTAIN_KEYS:
            if "+-" in rhs:
                val_s, sig_s = rhs.split("+-", 1)
                sigma = _parse_number(sig_s.strip(), key, lineno)
            else:
                val_s, sigma = rhs, getattr(data, key).sigma
            value = _parse_number(val_s.strip(), key, lineno)
            if sigma < 0:
                raise ConfigError(f"line {lineno}: negative sigma for {key!r}")
            updates[key] = UncertainValue(value, sigma)
        elif key in _PLAIN_KEYS:
            updates[key] = _parse_number(rhs, key, lineno)
        else:
            raise ConfigError(f"line {lineno}: unknown key {key!r}")
    consts = replace(data.constants, **const_updates)
    if not consts.alpha >= 0 or not consts.electron_mass_frequency > 0:
        raise ConfigError("alpha must be >= 0 and electron_mass_frequency > 0")
    return replace(data, constants=consts, **updates)


def default_config() -> InputData:
    """Inputs from the defaults file shipped with the package."""
    text = resources.files("mollowqed").joinpath("data/defaults.conf").read_text()
    return parse_config_text(text, InputData())


def load_config(path: str | os.PathLike | None = None,
                environ: Mapping[str, str] | None = None) -> InputData:
    """Load inputs from ``path``, the environment override, or the defaults.

    The file named by ``MOLLOWQED_CONSTANTS`` is used when ``path`` is None.
    Files are applied on top of the shipped defaults, so partial files work.
    """
    env = os.environ if environ is None else environ
    if path is None:
        path = env.get(CONSTANTS_ENV_VAR) or None
    base = default_config()
    if path is None:
        return base
    p = Path(path)
    try:
        text = p.read_text()
    except OSError as exc:
        raise ConfigError(f"cannot read constants file {str(p)!r}: {exc.strerror}") from None
    return parse_config_text(text, base)
