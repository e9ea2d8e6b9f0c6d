"""Reproduce the summary table of sideband shifts and the corrected prediction.

Drive: h = Omega / Gamma_j = 1000, Delta = 50 Gamma_j, for the 1S-2P_1/2 and
1S-2P_3/2 transitions.  Every shift is the summed (all-order) displacement
of the upper Mollow sideband; the lower one moves by the opposite amount.
"""

from fractions import Fraction

from mollowqed.constants import load_config
from mollowqed.prediction import aggregate, drive_for, table_one

data = load_config()
H, T = Fraction(1, 2), Fraction(3, 2)

print(f"{'channel':10s} {'j = 1/2 [kHz]':>22s} {'j = 3/2 [kHz]':>22s}")
rows = table_one(1000, 50, data)
for left, right in zip(rows[::2], rows[1::2]):
    cells = [f"{r.shift.value / 1e3:12.4f} ({r.shift.sigma / 1e3:.2g})" for r in (left, right)]
    print(f"{left.channel:10s} {cells[0]:>22s} {cells[1]:>22s}")

# The detuning displacement and the relative Rabi modification combine
# into the corrected generalized Rabi frequency.
for j in (H, T):
    b = aggregate(j, drive_for(j, 1000, 50, data), data)
    print(f"\nj = {j}")
    print(f"  bare generalized Rabi   {b.bare:.6e} Hz")
    print(f"  detuning displacement   {b.delta_rad.value:.6e} +- {b.delta_rad.sigma:.2g} Hz")
    print(f"  relative Rabi change    {b.omega_hat_rad.value:.4e} +- {b.omega_hat_rad.sigma:.2g}")
    print(f"  corrected, with C-term  {b.omega_c.value:.9e} +- {b.omega_c.sigma:.2g} Hz")
    print(f"  corrected, no C-term    {b.omega_no_c.value:.9e} +- {b.omega_no_c.sigma:.2g} Hz")
    print(f"  upper sideband shift    {b.headline.value:.6e} Hz")
    print(f"  ionization rate         {b.ionization:.4g} Hz "
          f"({b.ionization / b.drive.omega_rabi:.2e} of Omega)")
