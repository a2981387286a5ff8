"""
Physical inputs and scalar parameter derivations.

Everything is in natural units (c = hbar = 1), so mass, energy and frequency
share one unit and the Coulomb coupling ``f`` is a plain real number.
"""

import math
from dataclasses import dataclass

from .errors import InvalidInputError


@dataclass(frozen=True)
class ModelParams:
    """Physical inputs of the oscillator.

    Parameters
    ----------
    m : float
        Rest mass, > 0.
    f : float
        Coulomb coupling of the scalar potential ``S = f / rho``. The sign
        selects attractive or repulsive.
    l : int
        Azimuthal quantum number.
    n : int
        Radial quantum number. ``n >= 1`` whenever ``f != 0``; ``n = 0`` is
        only accepted for the pure oscillator (``f == 0``).
    """

    m: float
    f: float
    l: int
    n: int

    def __post_init__(self):
        if not (self.m > 0 and math.isfinite(self.m)):
            raise InvalidInputError(f"mass must be positive and finite, got {self.m}")
        if not math.isfinite(self.f):
            raise InvalidInputError(f"coupling must be finite, got {self.f}")
        if int(self.l) != self.l:
            raise InvalidInputError(f"l must be an integer, got {self.l}")
        if int(self.n) != self.n or self.n < 0:
            raise InvalidInputError(f"n must be a non-negative integer, got {self.n}")
        if self.n == 0 and self.f != 0:
            raise InvalidInputError(
                "n = 0 is not a bound state when f != 0; the ground state is n = 1"
            )


@dataclass(frozen=True)
class DerivedParams:
    """Quantities linking the physical inputs to the series equation."""

    gamma_abs: float
    alpha: float
    delta: float
    beta_sq: float
    theta: float


def derive_gamma(l, f):
    """|gamma| = sqrt(l^2 + f^2)."""
    return math.hypot(l, f)


def derive_alpha(gamma_abs):
    return 2.0 * gamma_abs + 1.0


def derive_delta(m, f, omega):
    """Dimensionless Coulomb strength ``2 m f / sqrt(m omega)``."""
    if not m > 0:
        raise InvalidInputError(f"mass must be positive, got {m}")
    if not omega > 0:
        raise InvalidInputError(f"omega must be positive, got {omega}")
    return 2.0 * m * f / math.sqrt(m * omega)


def omega_from_delta(m, f, delta):
    """Invert :func:`derive_delta`: ``omega = 4 m f^2 / delta^2``.

    ``delta`` must be nonzero and carry the sign of ``f``.
    """
    if not m > 0:
        raise InvalidInputError(f"mass must be positive, got {m}")
    if delta == 0 or f == 0:
        raise InvalidInputError("delta and f must both be nonzero")
    if math.copysign(1.0, delta) != math.copysign(1.0, f):
        raise InvalidInputError(
            f"sign of delta ({delta}) must match sign of f ({f})"
        )
    return 4.0 * m * f * f / (delta * delta)


def beta_squared(m, omega, energy):
    return energy * energy - m * m + m * omega


def theta_from_beta(m, omega, beta_sq, gamma_abs):
    return beta_sq / (m * omega) - 2.0 - 2.0 * gamma_abs


def reduced_eigenvalue(n, gamma_abs):
    """``beta^2 / (m omega)`` once ``theta = 2n`` is imposed."""
    return 2.0 * n + 2.0 * gamma_abs + 2.0


def energy_from_theta_condition(m, omega, n, gamma_abs):
    """Energy pair ``(E+, E-)`` with ``E^2 = m^2 + 2 m omega (n + |gamma| + 1/2)``."""
    if not m > 0:
        raise InvalidInputError(f"mass must be positive, got {m}")
    if not omega > 0:
        raise InvalidInputError(f"omega must be positive, got {omega}")
    if n < 0:
        raise InvalidInputError(f"n must be non-negative, got {n}")
    e = math.sqrt(m * m + 2.0 * m * omega * (n + gamma_abs + 0.5))
    return e, -e


def derive_params(params, omega, energy):
    """Collect every derived quantity for a given frequency and energy."""
    gamma_abs = derive_gamma(params.l, params.f)
    beta_sq = beta_squared(params.m, omega, energy)
    return DerivedParams(
        gamma_abs=gamma_abs,
        alpha=derive_alpha(gamma_abs),
        delta=derive_delta(params.m, params.f, omega),
        beta_sq=beta_sq,
        theta=theta_from_beta(params.m, omega, beta_sq, gamma_abs),
    )
