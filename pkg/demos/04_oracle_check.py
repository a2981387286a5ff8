# # Independent finite-difference check
#
# The series predicts ``beta^2 / (m omega) = 2n + 2|gamma| + 2`` for every
# quantized mode. A grid discretization of the radial equation, which knows
# nothing about the series, should contain that number in its spectrum.

# +
import dataclasses

from kgcoulomb import GridSpec, ModelParams, allowed_frequencies, pure_oscillator_mode, verify_mode

print(f"{'f':>4} {'l':>2} {'n':>2} {'lam':>10} {'grid lam':>12} {'rel err':>9}")
for f in (1.0, -1.0):
    for l in (0, 1, 2):
        for n in (1, 2, 3):
            for mode in allowed_frequencies(ModelParams(1.0, f, l, n)):
                r = verify_mode(mode)
                print(f"{f:>4} {l:>2} {n:>2} {r.predicted_lambda:>10.6f} {r.matched_lambda:>12.8f} {r.relative_error:>9.2e}")
# -

# Halving the grid spacing cuts the error by four: the scheme is second order.

mode = allowed_frequencies(ModelParams(1.0, 1.0, 0, 1))[0]
for points in (1000, 2000, 4000, 8000):
    print(points, verify_mode(mode, GridSpec(12.0, points)).relative_error)

# Without the Coulomb term the two-dimensional oscillator ladder appears.

print(verify_mode(pure_oscillator_mode(ModelParams(1.0, 0.0, 0, 0), omega=1.0)))

# Negative control: a detuned coupling no longer matches.

detuned = dataclasses.replace(mode, delta_root=1.1 * mode.delta_root)
print(verify_mode(detuned))
