"""Second-order Schroedinger-Coulomb matrix elements for the 1S and 2P states.

Units: energies in (Z alpha)^2 m, lengths in the ionic Bohr radius, so matrix
elements <i| z G(zeta) z |i> are in m a_B^4.  The energy enters through the
dimensionless parameter ``t`` with ``zeta = -1 / (2 n^2 t^2)``, where ``n`` is
the principal quantum number of the reference state (1 for the ground
state, 2 for the excited state).

Two reference states are covered:

* kind ``"g"``: <1S, m=0| z G z |1S, m=0>, intermediate P states;
* kind ``"e"``: <2P, m=0| z G z |2P, m=0>, intermediate S and D states.

Scalar routines work on Python complex numbers and transparently switch to
:mod:`mpmath` when the closed forms suffer cancellation.  Passing mpmath
numbers keeps the whole evaluation in extended precision.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Literal

import mpmath

__all__ = [
    "GreenPoleError",
    "ConvergenceError",
    "GreenMatrixElement",
    "OracleResult",
    "DIPOLE_SQUARED",
    "ANGULAR_WEIGHTS",
    "STANDARD_ANGULAR_WEIGHTS",
    "phi",
    "unreduced_matrix_g",
    "unreduced_matrix_e",
    "radial_part_s",
    "radial_part_d",
    "reduced_matrix",
    "reduced_matrix_g",
    "reduced_matrix_e",
    "reduced_pole_value",
    "reduced_pole_richardson",
    "unreduced_pole_residue",
    "matrix_element",
    "laguerre_overlap",
    "radial_green_oracle",
    "unreduced_matrix_oracle",
    "off_resonant_dimensionless",
]

Kind = Literal["g", "e"]
PoleConvention = Literal["resonant_term", "limit"]

# |<1S| z |2P, m=0>|^2 in units of a_B^2
DIPOLE_SQUARED = 2**15 / 3**10

# angular factors for the z-polarised element of the 2P state, by intermediate l
ANGULAR_WEIGHTS = {0: 1 / 3, 2: 4 / 15}
# the same for the polarisation-summed element
STANDARD_ANGULAR_WEIGHTS = {0: 1 / 3, 2: 2 / 3}

_POLE_TOL = 1e-12
_NEAR_POLE = 1e-2
_MAX_TERMS = 200_000


class GreenPoleError(ArithmeticError):
    """The energy sits on a bound-state pole of the Green function."""

    def __init__(self, message: str, index: int | None = None):
        super().__init__(message)
        self.index = index


class ConvergenceError(RuntimeError):
    """A series did not reach the requested accuracy."""


@dataclass(frozen=True)
class GreenMatrixElement:
    """Value of a second-order element in m a_B^4 at parameter ``t``."""

    value: complex
    kind: Literal["unreduced_g", "unreduced_e", "reduced_g", "reduced_e"]
    t: complex


# ---------------------------------------------------------------------------
# arithmetic helpers


def _is_mp(x) -> bool:
    return isinstance(x, (mpmath.mpf, mpmath.mpc))


def _eps(x) -> float:
    return float(mpmath.mp.eps) if _is_mp(x) else 2.220446049250313e-16


def _to_mp(x):
    return mpmath.mpc(x) if isinstance(x, complex) else mpmath.mpf(x) if not _is_mp(x) else x


def _out(value, like):
    """Return ``value`` as the numeric type of ``like``."""
    if _is_mp(like):
        return value
    return complex(value)


# ---------------------------------------------------------------------------
# hypergeometric function


def _pole_index(n: int, t) -> int | None:
    """Positive integer k with n t = k, or None."""
    nt = n * t
    k = round(float(mpmath.re(nt)) if _is_mp(nt) else complex(nt).real)
    if k >= 1 and abs(nt - k) <= _POLE_TOL * k:
        return k
    return None


def _lerch(b, z, skip: int | None = None):
    """b * sum_k z^k / (b + k), omitting the term ``k = skip``."""
    eps = _eps(b)
    total = 0
    power = 1
    quiet = 0
    for k in range(_MAX_TERMS):
        if k != skip:
            term = power / (b + k)
            total += term
            if abs(term) <= eps * abs(total) and k > abs(b):
                quiet += 1
                if quiet >= 3:
                    return b * total
            else:
                quiet = 0
        power *= z
    raise ConvergenceError("Lerch series did not converge")


def _pfaff(b, z):
    """2F1(1, b; b+1; z) via the Pfaff transform, summed in w = z/(z-1)."""
    eps = _eps(b)
    w = z / (z - 1)
    total = 0
    term = 1
    quiet = 0
    for k in range(_MAX_TERMS):
        total += term
        if abs(term) <= eps * abs(total):
            quiet += 1
            if quiet >= 3:
                return total / (1 - z)
        else:
            quiet = 0
        term = term * (k + 1) * w / (b + 1 + k)
    raise ConvergenceError("Pfaff series did not converge")


def _phi_core(n: int, t):
    b = -n * t
    z = ((1 - t) / (1 + t)) ** 2
    if z == 0:
        return 1
    w = z / (z - 1)
    az, aw = abs(z), abs(w)
    if min(az, aw) > 0.9:
        if _is_mp(t):
            return mpmath.hyp2f1(1, b, b + 1, z)
        with mpmath.workdps(30):
            return complex(mpmath.hyp2f1(1, _to_mp(b), _to_mp(b) + 1, _to_mp(z)))
    if az <= aw:
        return _lerch(b, z)
    return _pfaff(b, z)


def phi(n: int, t):
    """Phi(n, t) = 2F1(1, -n t; 1 - n t; ((1 - t)/(1 + t))^2).

    The direct series in z is used when it converges fastest, otherwise the
    Pfaff-transformed series in z/(z - 1); the latter covers the unit circle
    |z| = 1 reached for purely imaginary t.

    Parameters
    ----------
    n : int
        Principal quantum number of the reference state.
    t : complex or mpmath number

    Raises
    ------
    GreenPoleError
        If ``n t`` is a positive integer (bound-state pole).
    ConvergenceError
        If the series fail to converge.
    """
    if t == -1:
        raise ValueError("t = -1 is outside the domain")
    if t == 1:
        # z = 0: every term but the first vanishes, including a would-be pole term
        return mpmath.mpf(1) if _is_mp(t) else 1 + 0j
    k = _pole_index(n, t)
    if k is not None:
        raise GreenPoleError(f"bound-state pole at n t = {k}", k)
    return _out(_phi_core(n, t), t) if not _is_mp(t) else _phi_core(n, t)


# ---------------------------------------------------------------------------
# closed forms


def _xg(t):
    return ((((((38 * t + 26) * t + 19) * t - 19) * t - 12) * t + 12) * t + 3) * t - 3


def _xe(t):
    coeffs = (6739, -1702, -231, -1420, -262, 1944, -402, -1140, 435, 270, -135)
    acc = 0
    for c in coeffs:
        acc = acc * t + c
    return acc


def _x0(t):
    coeffs = (257, -2, 148, -294, 18, 258, -84, -90, 45)
    acc = 0
    for c in coeffs:
        acc = acc * t + c
    return acc


def _x2(t):
    coeffs = (4733, -1274, -37, -700, -34, 768, -174, -420, 165, 90, -45)
    acc = 0
    for c in coeffs:
        acc = acc * t + c
    return acc


def _rational_g(t):
    return 2 * t**2 * _xg(t) / (3 * (t - 1) ** 5 * (t + 1) ** 4)


def _phi_coeff_g(t):
    return -256 * t**9 / (3 * (t - 1) ** 5 * (t + 1) ** 5)


def _rational_e(t):
    return 16 * t**2 * _xe(t) / (15 * (t - 1) ** 7 * (t + 1) ** 5)


def _phi_coeff_e(t):
    return -(2**14) * t**11 * (23 * t**2 - 7) / (15 * (t - 1) ** 7 * (t + 1) ** 7)


def _rational_s(t):
    return 16 * t**2 * _x0(t) / (3 * (t - 1) ** 6 * (t + 1) ** 4)


def _phi_coeff_s(t):
    return -(2**14) * t**11 / (3 * (t**2 - 1) ** 6)


def _rational_d(t):
    return 16 * t**2 * _x2(t) / (3 * (t - 1) ** 7 * (t + 1) ** 5)


def _phi_coeff_d(t):
    return -(2**16) * t**11 * (4 * t**2 - 1) / (3 * (t**2 - 1) ** 7)


_FORMS = {
    "g": (1, _rational_g, _phi_coeff_g),
    "e": (2, _rational_e, _phi_coeff_e),
    "s": (2, _rational_s, _phi_coeff_s),
    "d": (2, _rational_d, _phi_coeff_d),
}


def _closed_form(key: str, t):
    """Rational part plus coefficient times Phi, guarding against cancellation."""
    n, rational, coeff = _FORMS[key]
    if abs(t - 1) < 1e-14 or abs(t + 1) < 1e-14:
        raise ValueError("t = +-1 is a removable singularity of the closed form; offset t")
    k = _pole_index(n, t)
    if k is not None:
        raise GreenPoleError(f"bound-state pole at n t = {k}", k)
    if _is_mp(t):
        return rational(t) + coeff(t) * _phi_core(n, t)
    tc = complex(t)
    r = rational(tc)
    value = r + coeff(tc) * _phi_core(n, tc)
    # digits lost to cancellation between the two parts
    if cmath.isfinite(value) and value != 0:
        lost = math.log10(max(abs(r), 1e-300) / abs(value))
    else:
        lost = math.log10(max(abs(r), 1.0)) + 20
    # the float result may itself be rounding noise, so re-estimate from each
    # extended evaluation until the working precision covers the loss
    dps = 0
    while lost > 3 and 25 + lost > dps:
        dps = int(25 + lost) + 5
        with mpmath.workdps(dps):
            tm = mpmath.mpc(tc) if tc.imag else mpmath.mpf(tc.real)
            rm = rational(tm)
            vm = rm + coeff(tm) * _phi_core(n, tm)
            lost = float(mpmath.log10(max(abs(rm), 1) / abs(vm))) if vm != 0 else lost + 20
        value = complex(vm)
    return value


def unreduced_matrix_g(t):
    """<1S| z G(zeta) z |1S> including all intermediate states, in m a_B^4."""
    return _closed_form("g", t)


def unreduced_matrix_e(t):
    """<2P, m=0| z G(zeta) z |2P, m=0> including all intermediate states."""
    return _closed_form("e", t)


def radial_part_s(t):
    """Radial integral of the 2P element with intermediate S states."""
    return _closed_form("s", t)


def radial_part_d(t):
    """Radial integral of the 2P element with intermediate D states."""
    return _closed_form("d", t)


# ---------------------------------------------------------------------------
# reduced elements and the resonant poles


@dataclass(frozen=True)
class _Resonance:
    n: int            # principal quantum number of the reference state
    k0: int           # Sturmian index of the resonant term (n t0 = k0)
    e_res: float      # energy of the resonant intermediate state
    key: str

    @property
    def t0(self) -> float:
        return self.k0 / self.n


# g: the 2P state (energy -1/8) is resonant at t = 2; e: the 1S state at t = 1/2
_RES = {"g": _Resonance(1, 2, -1 / 8, "g"), "e": _Resonance(2, 1, -1 / 2, "e")}


def _log_derivative_phi_coeff(kind: str, t):
    if kind == "g":
        return 9 / t - 5 / (t - 1) - 5 / (t + 1)
    return 11 / t + 46 * t / (23 * t**2 - 7) - 7 / (t - 1) - 7 / (t + 1)


def _subtraction(res: _Resonance, t):
    """|<g|z|e>|^2 / (E_res - zeta(t))."""
    zeta = -1 / (2 * res.n**2 * t**2)
    return DIPOLE_SQUARED / (res.e_res - zeta) if not _is_mp(t) else (
        mpmath.mpf(2) ** 15 / mpmath.mpf(3) ** 10 / (res.e_res - zeta))


def _check_kind(kind: str) -> _Resonance:
    if kind not in _RES:
        raise ValueError(f"kind must be 'g' or 'e', got {kind!r}")
    return _RES[kind]


def reduced_pole_value(kind: Kind, pole: PoleConvention = "resonant_term", dps: int = 40):
    """Reduced element exactly at its resonant pole, analytic route.

    The Phi series is split into the resonant Sturmian term and the rest.

    ``pole="resonant_term"`` drops the resonant term altogether: the
    explicit subtraction is taken to cancel it identically, as when the
    intermediate level is shifted off resonance inside the Sturmian
    denominator and the shift is removed after cancellation.

    ``pole="limit"`` returns the limit of the unreduced element minus the
    explicit subtraction as the energy approaches the pole, which adds the
    finite Taylor remainder of the cancellation.

    Returns
    -------
    mpmath.mpf
    """
    res = _check_kind(kind)
    if pole not in ("resonant_term", "limit"):
        raise ValueError(f"unknown pole convention {pole!r}")
    with mpmath.workdps(dps):
        n, k0 = res.n, res.k0
        t0 = mpmath.mpf(k0) / n
        b0 = -n * t0
        z0 = ((1 - t0) / (1 + t0)) ** 2
        _, rational, coeff = _FORMS[res.key]
        value = rational(t0) + coeff(t0) * _lerch(b0, z0, skip=k0)
        if pole == "limit":
            z2 = mpmath.mpf(2) ** 15 / mpmath.mpf(3) ** 10
            f0 = coeff(t0) * b0 * z0**k0
            dz = -4 / (1 - t0**2)
            f1 = f0 * (_log_derivative_phi_coeff(kind, t0) + 1 / t0 + k0 * dz)
            h1 = -1 / (n**2 * t0**3)
            h2 = 3 / (n**2 * t0**4)
            value += f1 / (-n) + z2 * h2 / (2 * h1**2)
        return +value


def _reduced_literal(res: _Resonance, t):
    return _closed_form(res.key, t) - _subtraction(res, t)


def reduced_matrix(kind: Kind, t, pole: PoleConvention = "resonant_term"):
    """Reduced element with the resonant intermediate state excluded.

    Away from the pole both conventions coincide with the closed form minus
    the explicit subtraction; near it the evaluation switches to extended
    precision to keep the cancellation exact.  At the pole the value of
    :func:`reduced_pole_value` is returned.

    Parameters
    ----------
    kind : {"g", "e"}
    t : complex or mpmath number
    pole : {"resonant_term", "limit"}
    """
    res = _check_kind(kind)
    if pole not in ("resonant_term", "limit"):
        raise ValueError(f"unknown pole convention {pole!r}")
    delta = abs(res.n * t - res.k0)
    if delta <= _POLE_TOL * res.k0:
        val = reduced_pole_value(kind, pole)
        return val if _is_mp(t) else complex(val)
    if delta < _NEAR_POLE and not _is_mp(t):
        digits = int(30 + 2 * -math.log10(delta))
        with mpmath.workdps(digits):
            tc = complex(t)
            tm = mpmath.mpc(tc) if tc.imag else mpmath.mpf(tc.real)
            return complex(_reduced_literal(res, tm))
    return _reduced_literal(res, t)


def reduced_matrix_g(zeta, constants=None, pole: PoleConvention = "resonant_term") -> complex:
    """Reduced ground-state element at energy ``zeta`` given in Hz."""
    from .hydrogen import t_of_energy

    return complex(reduced_matrix("g", t_of_energy(1, zeta, constants), pole))


def reduced_matrix_e(zeta, constants=None, pole: PoleConvention = "resonant_term") -> complex:
    """Reduced excited-state element at energy ``zeta`` given in Hz."""
    from .hydrogen import t_of_energy

    return complex(reduced_matrix("e", t_of_energy(2, zeta, constants), pole))


def matrix_element(kind: str, t, pole: PoleConvention = "resonant_term") -> GreenMatrixElement:
    """Tagged element for kinds ``unreduced_g``, ``unreduced_e``, ``reduced_g``, ``reduced_e``."""
    if kind == "unreduced_g":
        value = unreduced_matrix_g(t)
    elif kind == "unreduced_e":
        value = unreduced_matrix_e(t)
    elif kind in ("reduced_g", "reduced_e"):
        value = reduced_matrix(kind[-1], t, pole)
    else:
        raise ValueError(f"unknown kind {kind!r}")
    return GreenMatrixElement(complex(value), kind, complex(t))


def _neville_at_zero(xs, ys):
    """Polynomial extrapolation of (xs, ys) to x = 0."""
    p = list(ys)
    m = len(xs)
    for level in range(1, m):
        for i in range(m - level):
            p[i] = (xs[i + level] * p[i] - xs[i] * p[i + 1]) / (xs[i + level] - xs[i])
    return p[0]


def _hyp_closed_form(key: str, t):
    """Closed form with Phi from mpmath's hypergeometric routine."""
    n, rational, coeff = _FORMS[key]
    b = -n * t
    return rational(t) + coeff(t) * mpmath.hyp2f1(1, b, b + 1, ((1 - t) / (1 + t)) ** 2)


def reduced_pole_richardson(kind: Kind, pole: PoleConvention = "resonant_term",
                            offsets=(1e-4, 1e-5, 1e-6, 1e-7), dps: int = 60):
    """Reduced element at the pole from energy offsets and Richardson extrapolation.

    The parameter is moved to ``t0 + eps`` for each offset; Phi is taken
    from :func:`mpmath.hyp2f1`, independently of :func:`phi`.

    For ``pole="limit"`` the sampled quantity is the unreduced element minus
    the explicit subtraction.  For ``pole="resonant_term"`` it is the
    unreduced element minus its single resonant Sturmian term.  Both sampled
    functions are smooth in ``eps`` and are extrapolated to ``eps = 0``.
    """
    res = _check_kind(kind)
    with mpmath.workdps(dps):
        t0 = mpmath.mpf(res.k0) / res.n
        n, k0 = res.n, res.k0
        _, _, coeff = _FORMS[res.key]
        xs, ys = [], []
        for eps in offsets:
            e = mpmath.mpf(eps)
            t = t0 + e
            full = _hyp_closed_form(res.key, t)
            if pole == "limit":
                y = full - _subtraction(res, t)
            elif pole == "resonant_term":
                b = -n * t
                z = ((1 - t) / (1 + t)) ** 2
                y = full - coeff(t) * b * z**k0 / (b + k0)
            else:
                raise ValueError(f"unknown pole convention {pole!r}")
            xs.append(e)
            ys.append(y)
        return +_neville_at_zero(xs, ys)


def unreduced_pole_residue(kind: Kind, eps: float, dps: int = 50):
    """eps times the unreduced element at zeta = E_res - eps.

    Tends to |<g|z|e>|^2 as eps goes to zero when the divergence is a simple
    pole with the resonant-state weight.
    """
    res = _check_kind(kind)
    with mpmath.workdps(dps):
        zeta = mpmath.mpf(res.e_res) - mpmath.mpf(eps)
        t = mpmath.sqrt(-1 / (2 * res.n**2 * zeta))
        return +(mpmath.mpf(eps) * _closed_form(res.key, t))


# ---------------------------------------------------------------------------
# Laguerre-sum oracle


@dataclass(frozen=True)
class OracleResult:
    """Summed Sturmian series with its truncation estimate."""

    value: complex
    error_estimate: float
    n_terms: int


def _weighting(state: str, l: int, nu):
    """(lambda, prefactor, gamma) of the per-k overlap integral."""
    if state == "1S":
        return (1 + nu) / 2, 2 * (nu / 2) ** (4 + l), 3 + l
    if state == "2P":
        return (nu + 2) / 4, (nu / 2) ** (5 + l) / (2 * mpmath.sqrt(6)), 4 + l
    raise ValueError(f"state must be '1S' or '2P', got {state!r}")


def laguerre_overlap(l: int, state: str, nu, k: int):
    """Overlap of r^3 R_state(r) with the k-th Sturmian function of angular momentum l.

    Uses the closed Laplace transform of r^gamma L_k^mu(r) e^(-lambda r) as a
    terminating hypergeometric sum, evaluated at a working precision that
    grows with ``k`` to absorb its alternating cancellation.
    """
    nu = _to_mp(nu)
    lam, pref, gam = _weighting(state, l, nu)
    mu = 2 * l + 1
    x = 1 / lam
    extra = int(k * math.log10(1 + float(abs(x)))) + 10
    with mpmath.workdps(mpmath.mp.dps + extra):
        s = mpmath.mpf(0)
        c = mpmath.mpf(1)
        for j in range(k + 1):
            s += c
            c *= mpmath.mpf(-k + j) * (gam + 1 + j) / ((mu + 1 + j) * (j + 1)) * x
        integral = (lam ** (-1 - gam) * mpmath.factorial(gam) * mpmath.binomial(mu + k, k) * s)
        return +(pref * integral)


def _oracle_term(l: int, state: str, nu, k: int):
    overlap = laguerre_overlap(l, state, nu, k)
    denom = l + 1 + k - nu
    if denom == 0:
        raise GreenPoleError(f"Sturmian term k={k} is singular", k)
    return (2 * (2 / nu) ** (2 * l + 1) * mpmath.factorial(k)
            / (mpmath.factorial(2 * l + 1 + k) * denom) * overlap**2)


def radial_green_oracle(l: int, state: str, nu, k_max: int = 10_000, tol: float = 1e-12,
                        dps: int = 30, exclude: int | None = None) -> OracleResult:
    """Radial second-order integral from the Laguerre (Sturmian) expansion.

    Computes the double radial integral of r1^3 r2^3 R(r1) R(r2) g_l(r1, r2)
    for the 1S or 2P radial function, summing the Sturmian series term by
    term with every term integrated in closed form.

    For real ``nu`` the terms decay geometrically and the tail is estimated
    from the ratio of the last two terms.  For complex ``nu`` on the unit
    circle of the series variable the partial sums are accelerated with the
    Shanks transformation and the estimate is the change between the last
    two accelerated values, which use windows of 40 partial sums
    shifted by 20 terms.

    Parameters
    ----------
    l : int
        Angular momentum of the intermediate states.
    state : {"1S", "2P"}
        Radial weighting.
    nu : complex
        Energy parameter, ``nu = n t``.
    k_max : int
        Maximum number of terms.
    tol : float
        Requested relative accuracy.
    dps : int
        Base working precision in decimal digits.
    exclude : int, optional
        Sturmian index left out of the sum.  Dropping the singular term at
        a bound-state pole yields the reduced element directly.

    Raises
    ------
    ConvergenceError
        If ``tol`` is not reached within ``k_max`` terms.
    """
    with mpmath.workdps(dps):
        nu = _to_mp(nu)
        oscillating = abs(mpmath.im(nu)) > 0
        partial = []
        total = mpmath.mpf(0)
        prev = None
        accelerated = None
        estimate = math.inf
        for k in range(k_max):
            term = mpmath.mpf(0) if k == exclude else _oracle_term(l, state, nu, k)
            total += term
            partial.append(total)
            if not oscillating:
                if prev is not None and k >= 5 and term != 0:
                    ratio = abs(term / prev)
                    if ratio < 1:
                        estimate = float(abs(term) * ratio / (1 - ratio) / abs(total))
                        if estimate <= tol:
                            return OracleResult(complex(total), estimate, k + 1)
                elif term == 0 and k >= 5:
                    return OracleResult(complex(total), 0.0, k + 1)
                prev = term
            elif k >= 39 and k % 20 == 19:
                value = mpmath.shanks(partial[-40:])[-1][-1]
                if accelerated is not None:
                    estimate = float(abs(value - accelerated) / abs(value))
                    if estimate <= tol:
                        return OracleResult(complex(value), estimate, k + 1)
                accelerated = value
        raise ConvergenceError(
            f"oracle not converged after {k_max} terms (estimate {estimate:.3g})")


def unreduced_matrix_oracle(kind: Kind, t, k_max: int = 10_000, tol: float = 1e-12,
                            weights=None, dps: int = 30) -> OracleResult:
    """Unreduced element rebuilt from radial oracles and angular factors."""
    if kind == "g":
        r = radial_green_oracle(1, "1S", t, k_max, tol, dps)
        return OracleResult(r.value / 3, r.error_estimate, r.n_terms)
    if kind == "e":
        w = weights or ANGULAR_WEIGHTS
        nu = 2 * _to_mp(t)
        r0 = radial_green_oracle(0, "2P", nu, k_max, tol, dps)
        r2 = radial_green_oracle(2, "2P", nu, k_max, tol, dps)
        value = w[0] * r0.value + w[2] * r2.value
        return OracleResult(value, max(r0.error_estimate, r2.error_estimate),
                            max(r0.n_terms, r2.n_terms))
    raise ValueError(f"kind must be 'g' or 'e', got {kind!r}")


# ---------------------------------------------------------------------------
# the off-resonant constant


def off_resonant_dimensionless(pole: PoleConvention = "resonant_term",
                               conjugate_branch: bool = False) -> complex:
    """Off-resonant constant in units of 1 / ((Z alpha)^2 m).

    Combines reduced elements at the four leading-order energies: the ground
    element at t = 2/sqrt(7) and t = 2, the excited element at t = 1/2 and
    at t = sqrt(-1/2).  ``conjugate_branch`` selects the other square-root
    branch for the complex point.
    """
    from .hydrogen import off_resonant_energies, t_of_energy

    e1, e2, e3, e4 = off_resonant_energies()
    t_imag = t_of_energy(2, e2)
    if conjugate_branch:
        t_imag = t_imag.conjugate()
    mg3 = reduced_matrix("g", t_of_energy(1, e3), pole)
    mg4 = reduced_matrix("g", t_of_energy(1, e4), pole)
    me1 = reduced_matrix("e", t_of_energy(2, e1), pole)
    me2 = reduced_matrix("e", t_imag, pole)
    return complex((mg3 + mg4 - me1 - me2) / (4 * DIPOLE_SQUARED))
