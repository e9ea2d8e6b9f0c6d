"""Exact Mollow spectrum, its secular form, and where the sidebands peak.

The exact incoherent spectrum is compared with three Lorentzians.  The
numerical sideband maxima approach the fourth-order series in
gamma / Omega_R with a residual falling as its sixth power.
"""

import mpmath
import numpy as np

from mollowqed.spectrum import (
    DriveParams,
    find_peaks_numeric,
    secular_components,
    sideband_positions_series,
    spectrum_exact,
    spectrum_secular,
)

# a moderately resolved triplet, laser at 1 so offsets read directly
d = DriveParams(omega_rabi=1.0, detuning=0.5, gamma=0.05, omega_laser=1.0)
c = secular_components(d)
print(f"secular amplitudes A0 {c.A0:.4f}, A+- {c.Aplus:.4f}; widths {c.Gamma0:.4f}, {c.GammaPlus:.4f}")

x = np.linspace(-2, 2, 9)
for xi, se, ss in zip(x, spectrum_exact(1 + x, d), spectrum_secular(1 + x, d)):
    print(f"offset {xi:+.2f}: exact {se:.6e}  secular {ss:.6e}")

# residual of the series for shrinking gamma / Omega_R
ratios = [1e-1, 1e-2, 1e-3]
residuals = []
with mpmath.workdps(40):
    for r in ratios:
        dd = DriveParams(mpmath.mpf(1), mpmath.mpf("0.5"), mpmath.mpf(r) * mpmath.sqrt(1.25),
                         mpmath.mpf(1))
        peak = find_peaks_numeric(dd, rtol=1e-30, points_per_window=200, dps=40)[0]
        series = sideband_positions_series(dd)[0]
        residuals.append(abs(float((peak - series) / dd.generalized_rabi)))
        print(f"gamma/Omega_R = {r:.0e}: peak minus series = {residuals[-1]:.3e} Omega_R")
slope = np.polyfit(np.log(ratios), np.log(residuals), 1)[0]
print(f"log-log slope {slope:.3f}")
