"""
Radial wavefunctions ``R(xi) = N exp(-xi^2/2) xi^|gamma| H(xi)`` of quantized
modes, normalized with the planar measure ``xi dxi``.
"""

import csv
import math
from dataclasses import dataclass, replace

import numpy as np
from numpy.polynomial import polynomial as P
from scipy.integrate import simpson

from .errors import InvalidInputError, TailTooLargeError

DEFAULT_XI_MAX = 12.0
DEFAULT_POINTS = 4001
TAIL_RTOL = 1e-14


@dataclass(frozen=True, eq=False)
class RadialWavefunction:
    gamma_abs: float
    coefficients: np.ndarray
    normalization: float
    omega: float
    m: float

    def shape(self, xi):
        """Unnormalized ``exp(-xi^2/2) xi^|gamma| H(xi)``."""
        xi = np.asarray(xi, dtype=float)
        return np.exp(-0.5 * xi**2) * xi**self.gamma_abs * P.polyval(xi, self.coefficients)

    def __call__(self, xi):
        return self.normalization * self.shape(xi)

    def rho(self, xi):
        """Physical radius for a dimensionless ``xi = sqrt(m omega) rho``."""
        return np.asarray(xi, dtype=float) / math.sqrt(self.m * self.omega)


@dataclass(frozen=True, eq=False)
class RadialTable:
    xi_values: np.ndarray
    r_values: np.ndarray
    rho_values: np.ndarray

    def __post_init__(self):
        n = len(self.xi_values)
        if len(self.r_values) != n or len(self.rho_values) != n:
            raise InvalidInputError("table columns must have equal length")
        if n > 1 and not np.all(np.diff(self.xi_values) > 0):
            raise InvalidInputError("xi grid must be strictly ascending")

    def write_csv(self, fh):
        """Write ``xi,rho,R`` rows with 15 significant digits."""
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(["xi", "rho", "R"])
        for row in zip(self.xi_values, self.rho_values, self.r_values):
            writer.writerow([f"{v:.15g}" for v in row])

    @classmethod
    def read_csv(cls, fh):
        reader = csv.reader(fh)
        header = next(reader)
        if header != ["xi", "rho", "R"]:
            raise InvalidInputError(f"unexpected header {header}")
        data = np.array([[float(v) for v in row] for row in reader])
        return cls(xi_values=data[:, 0], r_values=data[:, 2], rho_values=data[:, 1])


def normalize(wf, xi_max=DEFAULT_XI_MAX, points=DEFAULT_POINTS):
    """Constant ``N`` with ``int_0^xi_max |R|^2 xi dxi = 1`` (composite Simpson).

    Any existing ``wf.normalization`` is ignored.
    """
    if points < 200:
        raise InvalidInputError(f"need at least 200 quadrature points, got {points}")
    xi = np.linspace(0.0, xi_max, points)
    integrand = wf.shape(xi) ** 2 * xi
    peak = np.max(integrand)
    if not peak > 0:
        raise InvalidInputError("wavefunction vanishes identically on the grid")
    if integrand[-1] > TAIL_RTOL * peak:
        raise TailTooLargeError(
            f"integrand at xi_max={xi_max} is {integrand[-1] / peak:.3e} of its peak; "
            "increase xi_max"
        )
    return 1.0 / math.sqrt(simpson(integrand, x=xi))


def build_radial(mode, xi_max=DEFAULT_XI_MAX, points=DEFAULT_POINTS):
    """Normalized radial wavefunction of a quantized mode."""
    wf = RadialWavefunction(
        gamma_abs=mode.gamma_abs,
        coefficients=np.asarray(mode.coefficients, dtype=float),
        normalization=1.0,
        omega=mode.omega,
        m=mode.m,
    )
    return replace(wf, normalization=normalize(wf, xi_max, points))


def sample_to_table(wf, xi_max=DEFAULT_XI_MAX, points=DEFAULT_POINTS):
    if points < 2:
        raise InvalidInputError(f"need at least 2 points, got {points}")
    xi = np.linspace(0.0, xi_max, points)
    return RadialTable(xi_values=xi, r_values=wf(xi), rho_values=wf.rho(xi))
