# # Ground state of the Klein-Gordon oscillator with a Coulomb-type potential
#
# With the scalar potential ``S = f / rho`` added to the mass, the radial
# Heun series only becomes a polynomial for special oscillator frequencies.
# The lowest such mode has radial number ``n = 1``; there is no ``n = 0``
# bound state once ``f != 0``.

# +
import math

from kgcoulomb import (
    InvalidInputError,
    ModelParams,
    allowed_frequencies,
    ground_state_energy,
    ground_state_frequency,
)

params = ModelParams(m=1.0, f=1.0, l=0, n=1)
(mode,) = allowed_frequencies(params)
print(f"|gamma|       = {mode.gamma_abs}")
print(f"delta root    = {mode.delta_root:.15f}  (sqrt 6 = {math.sqrt(6):.15f})")
print(f"omega_(1,0)   = {mode.omega:.15f}")
print(f"E+, E-        = {mode.energy_plus:.15f}, {mode.energy_minus:.15f}")
# -

# The root solver never sees the closed forms; compare against them.

print("closed-form omega:", ground_state_frequency(1.0, 1.0, 0))
print("closed-form E    :", ground_state_energy(1.0, 1.0, 0))

# The terminated polynomial is first degree, ``H = 1 + (delta / alpha) xi``:

print("coefficients a_0, a_1:", mode.coefficients, " delta/alpha =", mode.delta_root / mode.alpha)

# Asking for ``n = 0`` with a nonzero coupling is rejected.

try:
    ModelParams(m=1.0, f=1.0, l=0, n=0)
except InvalidInputError as exc:
    print("n = 0:", exc)

# Sweeping the angular number shows the allowed frequency falling as
# ``|gamma|`` grows, for attractive and repulsive coupling alike.

print(f"{'l':>3} {'omega(f=+1)':>18} {'omega(f=-1)':>18}")
for l in range(6):
    up = allowed_frequencies(ModelParams(1.0, 1.0, l, 1))[0].omega
    down = allowed_frequencies(ModelParams(1.0, -1.0, l, 1))[0].omega
    print(f"{l:>3} {up:>18.15f} {down:>18.15f}")
