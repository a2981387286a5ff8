# # Allowed frequencies for excited states
#
# For radial number ``n`` the condition ``a_{n+1}(delta) = 0`` is a degree
# ``n + 1`` polynomial in ``delta`` with definite parity. Every real root with
# the sign of ``f`` gives an allowed ``omega = 4 m f^2 / delta^2``; from
# ``n = 3`` on there is more than one.

# +
import numpy as np

from kgcoulomb import ModelParams, allowed_frequencies, coefficient_polynomials

m, f, l = 1.0, 1.0, 0
for n in range(1, 7):
    modes = allowed_frequencies(ModelParams(m, f, l, n))
    omegas = ", ".join(f"{mode.omega:.10f}" for mode in modes)
    print(f"n = {n}: {len(modes)} mode(s)  omega = {omegas}")
# -

# For ``n = 2`` the condition reduces to ``delta^2 = 4 (2 alpha + 1)``,
# hence ``omega = m f^2 / (4 |gamma| + 3)``; with ``|gamma| = 1`` that is 1/7.

(mode,) = allowed_frequencies(ModelParams(m, f, l, 2))
print(mode.omega, 1 / 7)

# The polynomial itself, with ``alpha = 3`` and ``theta = 2n = 6``
# (ascending powers of ``delta``):

poly = coefficient_polynomials(alpha=3.0, theta=6.0, n_max=4).polys[4]
print(np.array2string(poly, precision=6))
print("roots:", np.sort(np.polynomial.polynomial.polyroots(poly).real))

# Flipping the sign of the coupling flips the sign of every root, so the
# frequencies and energies are unchanged.

for n in (3, 4):
    a = [x.energy_plus for x in allowed_frequencies(ModelParams(m, f, l, n))]
    b = [x.energy_plus for x in allowed_frequencies(ModelParams(m, -f, l, n))]
    print(n, np.max(np.abs(np.subtract(a, b))))
