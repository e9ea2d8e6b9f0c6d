"""Two readings of a reduced Green-function element at its resonant pole.

Exciting 1S with a photon of the 1S-2P energy puts the intermediate energy
exactly on the 2P level, so that term has to be removed from the Coulomb
Green function.  How the remaining finite value is defined matters:

* ``resonant_term`` drops the resonant term of the hypergeometric
  representation outright (the published convention);
* ``limit`` takes the limit of the full element minus the explicit
  single-state subtraction as the energy approaches the pole.

Both are evaluated analytically and by energy offsets with Richardson
extrapolation, and the resulting off-resonant constant D is compared.
"""

from mollowqed import green
from mollowqed.constants import load_config, resonance_frequency
from mollowqed.corrections import off_resonant_constant

data = load_config()
res = resonance_frequency(data.constants)

for kind, label in (("g", "ground state at t = 2"), ("e", "2P state at t = 1/2")):
    print(label)
    for pole in ("resonant_term", "limit"):
        analytic = green.reduced_pole_value(kind, pole)
        offsets = green.reduced_pole_richardson(kind, pole)
        print(f"  {pole:14s} analytic {float(analytic):.12f}   offsets {float(offsets):.12f}")

# The unreduced element diverges as |<1S|z|2P>|^2 / eps near the pole.
for eps in (1e-4, 1e-6, 1e-8):
    r = float(green.unreduced_pole_residue("g", eps))
    print(f"eps = {eps:.0e}: eps * G = {r:.10f} (dipole squared {green.DIPOLE_SQUARED:.10f})")

for pole in ("resonant_term", "limit"):
    const = off_resonant_constant(data, pole)
    print(f"D * resonance ({pole}): {const.real.value * res:.6f} {const.imag.value * res:+.7f} i")
