"""How the prediction responds to a small change of the fine-structure constant.

The drive is fixed in hertz; only quantities derived from alpha are
recomputed.  A relative change of 1e-9 is small enough for a clean
finite-difference derivative and large enough to stay above rounding.
"""

import dataclasses
from fractions import Fraction

from mollowqed.constants import load_config
from mollowqed.prediction import aggregate, drive_for

data = load_config()
j = Fraction(1, 2)
drive = drive_for(j, 1000, 50, data)
step = 1e-9


def corrected(alpha_scale):
    constants = dataclasses.replace(data.constants, alpha=data.constants.alpha * alpha_scale)
    shifted = dataclasses.replace(data, constants=constants)
    return aggregate(j, drive, shifted)


base = corrected(1.0)
up, down = corrected(1 + step), corrected(1 - step)
derivative = (up.headline.value - down.headline.value) / (2 * step)
print(f"upper sideband shift        {base.headline.value:.6e} Hz")
print(f"d shift / d ln alpha        {derivative:.6e} Hz")
print(f"1e-9 change of alpha moves it by {derivative * step:.3e} Hz, "
      f"against an uncertainty of {base.headline.sigma:.2e} Hz")
