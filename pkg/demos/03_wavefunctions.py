# # Radial wavefunctions
#
# ``R(xi) = N exp(-xi^2/2) xi^|gamma| H(xi)``, normalized so that
# ``int |R|^2 xi dxi = 1`` (planar measure), with ``xi = sqrt(m omega) rho``.

# +
import sys

import numpy as np

from kgcoulomb import ModelParams, build_radial, sample_to_table, solve_mode

repulsive = build_radial(solve_mode(ModelParams(1.0, 1.0, 0, 1)))
attractive_mode = solve_mode(ModelParams(1.0, -1.0, 0, 1))
attractive = build_radial(attractive_mode)
print("N (f=+1):", repulsive.normalization)
print("N (f=-1):", attractive.normalization)
# -

# With ``f < 0`` the first-degree ``H`` changes sign at ``xi = alpha / |delta|``,
# so the attractive ground state has a node; the repulsive one has none.

node = attractive_mode.alpha / abs(attractive_mode.delta_root)
xi = np.linspace(0.0, 5.0, 11)
print(f"node at xi = {node:.6f}, R there = {attractive(node):.2e}")
print(f"{'xi':>5} {'R(f=+1)':>12} {'R(f=-1)':>12}")
for x, a, b in zip(xi, repulsive(xi), attractive(xi)):
    print(f"{x:>5.1f} {a:>12.6f} {b:>12.6f}")

# A coarse table in the export format (the CLI writes the same CSV):

sample_to_table(repulsive, xi_max=3.0, points=7).write_csv(sys.stdout)
