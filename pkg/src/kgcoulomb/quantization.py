"""
Quantized modes from the two termination conditions of the Heun series.

Fixing ``theta = 2n`` sets the energy in terms of the frequency. The second
condition ``a_{n+1}(delta) = 0`` is a polynomial equation in ``delta``; each
admissible real root fixes an allowed frequency ``omega = 4 m f^2 / delta^2``.
"""

import math
from dataclasses import dataclass

import numpy as np
from numpy.polynomial import polynomial as P

from . import params as prm
from .errors import DegenerateCaseError, InvalidInputError, ModeNotFoundError
from .series import coefficient_polynomials, coefficient_with_derivative, generate_coefficients

IMAG_TOL = 1e-10
NEWTON_RTOL = 1e-15
NEWTON_MAXITER = 60


@dataclass(frozen=True, eq=False)
class ModeSolution:
    """One quantized mode.

    ``coefficients`` holds the terminated polynomial ``a_0 .. a_n`` of H.
    For the pure oscillator (``f == 0``) ``delta_root`` is zero and ``omega``
    is whatever the caller chose.
    """

    n: int
    l: int
    m: float
    f: float
    gamma_abs: float
    delta_root: float
    omega: float
    energy_plus: float
    energy_minus: float
    coefficients: np.ndarray

    @property
    def alpha(self):
        return prm.derive_alpha(self.gamma_abs)

    @property
    def theta(self):
        return 2.0 * self.n

    @property
    def reduced_eigenvalue(self):
        """``beta^2 / (m omega)``, the eigenvalue of the dimensionless radial equation."""
        return prm.reduced_eigenvalue(self.n, self.gamma_abs)


def _newton(alpha, theta, index, z):
    for _ in range(NEWTON_MAXITER):
        value, slope = coefficient_with_derivative(alpha, theta, z, index)
        if slope == 0:
            break
        step = value / slope
        z = z - step
        if abs(step) <= NEWTON_RTOL * max(abs(z), 1.0):
            break
    return z


def termination_roots(alpha, n):
    """All nonzero real roots of ``a_{n+1}(delta)`` with ``theta = 2n``.

    Companion-matrix eigenvalues seed a Newton polish that evaluates the
    recurrence directly. Returned in ascending order.
    """
    theta = 2.0 * n
    poly = coefficient_polynomials(alpha, theta, n + 1).polys[n + 1]
    # delta = 0 is an exact root whenever n + 1 is odd; divide it out.
    while poly[0] == 0.0 and len(poly) > 1:
        poly = poly[1:]
    if len(poly) < 2:
        return np.array([])
    seeds = P.polyroots(poly)

    roots = []
    for seed in seeds:
        z = _newton(alpha, theta, n + 1, complex(seed))
        if abs(z.imag) > IMAG_TOL * max(1.0, abs(z)):
            continue
        x = _newton(alpha, theta, n + 1, z.real)
        if x == 0.0:
            continue
        if any(abs(x - r) <= 1e-9 * abs(r) for r in roots):
            continue
        roots.append(float(x))
    return np.sort(np.array(roots))


def _mode(params, gamma_abs, alpha, delta, omega):
    e_plus, e_minus = prm.energy_from_theta_condition(params.m, omega, params.n, gamma_abs)
    coeffs = generate_coefficients(alpha, 2.0 * params.n, delta, params.n + 2).coeffs
    return ModeSolution(
        n=params.n,
        l=params.l,
        m=params.m,
        f=params.f,
        gamma_abs=gamma_abs,
        delta_root=float(delta),
        omega=omega,
        energy_plus=e_plus,
        energy_minus=e_minus,
        coefficients=coeffs[: params.n + 1].copy(),
    )


def allowed_frequencies(params):
    """Every allowed mode for ``(m, f, l, n)``, sorted by descending omega.

    Roots of the wrong sign (``sign(delta) != sign(f)``) are dropped; an empty
    list means no admissible frequency exists.
    """
    if params.f == 0:
        raise DegenerateCaseError(
            "f = 0 leaves omega unquantized; use pure_oscillator_mode instead"
        )
    gamma_abs = prm.derive_gamma(params.l, params.f)
    alpha = prm.derive_alpha(gamma_abs)
    sign = math.copysign(1.0, params.f)

    modes = []
    for delta in termination_roots(alpha, params.n):
        if math.copysign(1.0, delta) != sign:
            continue
        omega = prm.omega_from_delta(params.m, params.f, delta)
        modes.append(_mode(params, gamma_abs, alpha, delta, omega))
    modes.sort(key=lambda mode: mode.omega, reverse=True)
    return modes


def solve_mode(params, root_index=0):
    modes = allowed_frequencies(params)
    if not 0 <= root_index < len(modes):
        raise ModeNotFoundError(
            f"root index {root_index} out of range: {len(modes)} mode(s) for {params}"
        )
    return modes[root_index]


def pure_oscillator_mode(params, omega):
    """Mode of the oscillator without Coulomb term (``f == 0``).

    Here ``delta = 0`` and ``omega`` is free. Only even ``n`` terminate the
    series, giving the two-dimensional oscillator ladder
    ``beta^2 / (m omega) = 2 (n + |l| + 1)``.
    """
    if params.f != 0:
        raise InvalidInputError("pure_oscillator_mode requires f = 0")
    if params.n % 2:
        raise InvalidInputError(
            f"with f = 0 only even n give polynomial solutions, got n = {params.n}"
        )
    if not omega > 0:
        raise InvalidInputError(f"omega must be positive, got {omega}")
    gamma_abs = prm.derive_gamma(params.l, 0.0)
    return _mode(params, gamma_abs, prm.derive_alpha(gamma_abs), 0.0, omega)


def ground_state_frequency(m, f, l):
    """Closed-form ``omega_{1,l} = 2 m f^2 / (2|gamma| + 1)``."""
    if f == 0:
        raise DegenerateCaseError("ground-state frequency needs f != 0")
    if not m > 0:
        raise InvalidInputError(f"mass must be positive, got {m}")
    return 2.0 * m * f * f / (2.0 * prm.derive_gamma(l, f) + 1.0)


def ground_state_energy(m, f, l):
    """Closed-form ``E_{1,l} = +/- m [1 + 4 f^2 (|gamma| + 3/2) / (2|gamma| + 1)]^(1/2)``."""
    if f == 0:
        raise DegenerateCaseError("ground-state energy needs f != 0")
    if not m > 0:
        raise InvalidInputError(f"mass must be positive, got {m}")
    g = prm.derive_gamma(l, f)
    e = m * math.sqrt(1.0 + 4.0 * f * f * (g + 1.5) / (2.0 * g + 1.0))
    return e, -e
