"""Independent reference computations used only by the tests.

None of these routines call into the package's numerical code paths.
"""

from __future__ import annotations

import mpmath as mp
import sympy
from sympy.physics.wigner import clebsch_gordan, gaunt


# ---------------------------------------------------------------------------
# resonance fluorescence from the master equation


def fluorescence_spectrum(offset, omega_rabi, detuning, gamma, dps=30):
    """Incoherent spectrum from the quantum regression theorem, times gamma.

    Builds the Liouvillian of a driven two-level atom with spontaneous
    decay, finds its steady state and evaluates the Laplace transform of
    the fluctuation correlation <d sigma+(tau) d sigma-(0)> at ``offset``
    from the laser frequency.
    """
    with mp.workdps(dps):
        sp = mp.matrix([[0, 0], [1, 0]])
        sm = sp.T
        ham = -detuning * sp * sm + mp.mpf(omega_rabi) / 2 * (sp + sm)

        def lindblad(rho):
            return (-1j * (ham * rho - rho * ham)
                    + gamma * (sm * rho * sp - (sp * sm * rho + rho * sp * sm) / 2))

        sup = mp.matrix(4, 4)
        for col in range(4):
            unit = mp.matrix(2, 2)
            unit[col // 2, col % 2] = 1
            out = lindblad(unit)
            for row in range(4):
                sup[row, col] = out[row // 2, row % 2]
        lhs = sup.copy()
        for col in range(4):
            lhs[0, col] = 1 if col in (0, 3) else 0
        vec = mp.lu_solve(lhs, mp.matrix([1, 0, 0, 0]))
        rho = mp.matrix([[vec[0], vec[1]], [vec[2], vec[3]]])
        mean = (sm * rho)[0, 0] + (sm * rho)[1, 1]
        fluct = sm * rho - mean * rho
        fv = mp.matrix([fluct[0, 0], fluct[0, 1], fluct[1, 0], fluct[1, 1]])
        sol = mp.lu_solve(sup + 1j * offset * mp.eye(4), fv)
        corr = -(sp * mp.matrix([[sol[0], sol[1]], [sol[2], sol[3]]]))
        return gamma * mp.re(corr[0, 0] + corr[1, 1]) / mp.pi


# ---------------------------------------------------------------------------
# Dirac-Coulomb bound states


def dirac_radial(n, kappa, za):
    """Normalised (r g, r f) of a Dirac-Coulomb state, electron mass 1.

    Both sign choices of the confluent-hypergeometric combination are tried
    and the one satisfying the radial Dirac equation is kept.
    """
    ak = abs(kappa)
    nr = n - ak
    gam = mp.sqrt(kappa**2 - za**2)
    energy = 1 / mp.sqrt(1 + (za / (nr + gam)) ** 2)
    lam = mp.sqrt(1 - energy**2)
    big_n = mp.sqrt(n**2 - 2 * nr * (ak - gam))

    def pieces(r, sgn):
        rho = 2 * lam * r
        f1 = mp.hyp1f1(-nr, 2 * gam + 1, rho)
        f2 = mp.hyp1f1(1 - nr, 2 * gam + 1, rho) if nr > 0 else 0
        base = rho**gam * mp.exp(-rho / 2)
        upper = mp.sqrt(1 + energy) * base * ((big_n - kappa) * f1 + sgn * nr * f2)
        lower = -mp.sqrt(1 - energy) * base * ((big_n - kappa) * f1 - sgn * nr * f2)
        return upper, lower

    for sgn in (1, -1):
        def upper(r, s=sgn):
            return pieces(r, s)[0]

        def lower(r, s=sgn):
            return pieces(r, s)[1]

        r0 = mp.mpf("0.7") / za
        res1 = mp.diff(upper, r0) - (-kappa / r0 * upper(r0) + (energy + 1 + za / r0) * lower(r0))
        res2 = mp.diff(lower, r0) - (kappa / r0 * lower(r0) - (energy - 1 + za / r0) * upper(r0))
        scale = abs(upper(r0)) * za
        if abs(res1) < 1e-15 * scale and abs(res2) < 1e-15 * scale:
            norm = mp.quad(lambda r: upper(r) ** 2 + lower(r) ** 2, [0, 1 / za, 10 / za, mp.inf])
            c = 1 / mp.sqrt(norm)
            return (lambda r: c * upper(r)), (lambda r: c * lower(r))
    raise RuntimeError("no sign choice satisfies the radial Dirac equation")


def spinor_cos(l1, j1, l2, j2, m):
    """<Omega_{l1 j1 m}| cos(theta) |Omega_{l2 j2 m}> in Condon-Shortley phases."""
    half = sympy.Rational(1, 2)
    total = sympy.Integer(0)
    for ms in (half, -half):
        ml = m - ms
        if abs(ml) > l1 or abs(ml) > l2:
            continue
        c1 = clebsch_gordan(l1, half, j1, ml, ms, m)
        c2 = clebsch_gordan(l2, half, j2, ml, ms, m)
        ang = sympy.sqrt(4 * sympy.pi / 3) * (-1) ** ml * gaunt(l1, 1, l2, -ml, 0, ml)
        total += c1 * c2 * ang
    return sympy.nsimplify(sympy.simplify(total))


def _l_and_j(kappa):
    j = sympy.Rational(2 * abs(kappa) - 1, 2)
    l = kappa if kappa > 0 else -kappa - 1
    return l, j


def dirac_dipole_ratio(j_upper, za, dps=30):
    """|<1S_1/2| z |2P_j>| with Dirac states over the Schroedinger value, m = 1/2."""
    with mp.workdps(dps):
        za = mp.mpf(za)
        m = sympy.Rational(1, 2)
        k2 = 1 if j_upper == sympy.Rational(1, 2) else -2
        g1, f1 = dirac_radial(1, -1, za)
        g2, f2 = dirac_radial(2, k2, za)
        l1, j1 = _l_and_j(-1)
        l2, j2 = _l_and_j(k2)
        s1, _ = _l_and_j(1)
        s2, _ = _l_and_j(-k2)
        big = mp.mpf(str(sympy.N(spinor_cos(l1, j1, l2, j2, m), dps + 5)))
        small = mp.mpf(str(sympy.N(spinor_cos(s1, j1, s2, j2, m), dps + 5)))
        pts = [0, 1 / za, 10 / za, mp.inf]
        rel = mp.quad(lambda r: r * (g1(r) * g2(r) * big + f1(r) * f2(r) * small), pts)
        nonrel = mp.quad(lambda r: r**3 * 2 * za**1.5 * mp.exp(-za * r)
                         * za**1.5 / (2 * mp.sqrt(6)) * za * r * mp.exp(-za * r / 2), pts)
        return abs(rel / (nonrel * big))


# ---------------------------------------------------------------------------
# Schroedinger hydrogen integrals


def schroedinger_dipole(component, m_l, spin_j=None, m_j=None, m_s_initial=None):
    """Exact <1S| x_i |2P, m_l> (or spin-coupled element) from sympy, in Bohr radii."""
    r, th, ph = sympy.symbols("r theta phi", positive=True)
    from sympy.physics.hydrogen import R_nl
    from sympy import Ynm

    coords = {"x": r * sympy.sin(th) * sympy.cos(ph),
              "y": r * sympy.sin(th) * sympy.sin(ph),
              "z": r * sympy.cos(th)}

    def spatial(ml):
        psi1 = R_nl(1, 0, r, 1) * Ynm(0, 0, th, ph).expand(func=True)
        psi2 = R_nl(2, 1, r, 1) * Ynm(1, ml, th, ph).expand(func=True)
        integrand = sympy.conjugate(psi1) * coords[component] * psi2 * r**2 * sympy.sin(th)
        val = sympy.integrate(integrand, (ph, 0, 2 * sympy.pi))
        val = sympy.integrate(val, (th, 0, sympy.pi))
        return sympy.simplify(sympy.integrate(val, (r, 0, sympy.oo)))

    if spin_j is None:
        return spatial(m_l)
    half = sympy.Rational(1, 2)
    total = sympy.Integer(0)
    for ms in (half, -half):
        ml = m_j - ms
        if abs(ml) > 1 or ms != m_s_initial:
            continue
        total += clebsch_gordan(1, half, spin_j, ml, ms, m_j) * spatial(int(ml))
    return sympy.simplify(total)


def phi_direct(n, t, dps=40, terms=None):
    """2F1(1, -n t; 1 - n t; z) by mpmath's own hypergeometric routine."""
    with mp.workdps(dps):
        t = mp.mpmathify(t)
        z = ((1 - t) / (1 + t)) ** 2
        b = -n * t
        return mp.hyp2f1(1, b, b + 1, z)


def phi_series(n, t, dps=40, max_terms=200000, tol=1e-30):
    """b sum_k z^k / (b + k), summed term by term until below ``tol``."""
    with mp.workdps(dps):
        t = mp.mpmathify(t)
        z = ((1 - t) / (1 + t)) ** 2
        b = -n * t
        total = mp.mpf(0)
        zk = mp.mpf(1)
        for k in range(max_terms):
            term = zk / (b + k)
            total += term
            if abs(term) < tol * abs(total) and k > 5:
                return b * total
            zk *= z
        raise RuntimeError("series did not converge")
