"""
Finite-difference check of quantized modes.

The dimensionless radial equation

    R'' + R'/xi - gamma^2 R / xi^2 - delta R / xi - xi^2 R + lam R = 0,

with ``lam = beta^2 / (m omega)``, is solved as a grid eigenvalue problem
without any use of the series. Writing ``R = xi^|gamma| w`` (the regular
indicial exponent at the origin) gives the Sturm-Liouville form

    -(p w')' + p (delta / xi + xi^2) w = lam p w,    p = xi^(2|gamma| + 1),

whose solution ``w`` is smooth at ``xi = 0``. It is discretized in flux form
on the cell-centred grid ``xi_i = (i - 1/2) h``, with ``p`` sampled at cell
faces and the mass term integrated exactly over each cell, then symmetrized
by the square root of the mass. The flux weight vanishes at the origin, so no
boundary value is imposed there; ``w = 0`` just past ``xi_max``. The scheme
is second order for every ``|gamma| >= 0``, including the non-smooth
``0 < |gamma| < 1`` range where a plain ``u = sqrt(xi) R`` vertex grid
degrades. The low eigenvalues are compared against ``lam = 2n + 2|gamma| + 2``
predicted by the series.
"""

from dataclasses import dataclass

import numpy as np
from scipy.linalg import eigh_tridiagonal

from .errors import InvalidInputError

DEFAULT_XI_MAX = 12.0
DEFAULT_POINTS = 4000
DEFAULT_TOL = 1e-4


@dataclass(frozen=True)
class GridSpec:
    xi_max: float = DEFAULT_XI_MAX
    points: int = DEFAULT_POINTS

    def __post_init__(self):
        if not self.xi_max > 0:
            raise InvalidInputError(f"xi_max must be positive, got {self.xi_max}")
        if self.points < 2:
            raise InvalidInputError(f"points must be >= 2, got {self.points}")

    @property
    def h(self):
        return self.xi_max / self.points

    def nodes(self):
        """Cell centres ``h/2, 3h/2, ..., xi_max - h/2``."""
        return self.h * (np.arange(self.points) + 0.5)


@dataclass(frozen=True, eq=False)
class TridiagonalMatrix:
    diagonal: np.ndarray
    off_diagonal: np.ndarray

    @property
    def size(self):
        return len(self.diagonal)

    def to_dense(self):
        return (
            np.diag(self.diagonal)
            + np.diag(self.off_diagonal, 1)
            + np.diag(self.off_diagonal, -1)
        )


@dataclass(frozen=True)
class OracleReport:
    predicted_lambda: float
    matched_lambda: float
    relative_error: float
    grid: GridSpec
    passed: bool


def discretize_radial_operator(gamma_abs, delta, grid):
    """Symmetric tridiagonal matrix whose eigenvalues approximate ``lam``."""
    if gamma_abs < 0:
        raise InvalidInputError(f"gamma_abs must be >= 0, got {gamma_abs}")
    a = 2.0 * gamma_abs + 1.0
    h = grid.h
    xi = grid.nodes()
    left = xi - 0.5 * h
    right = xi + 0.5 * h
    # every weight is scaled by xi_i^a to keep large |gamma| from underflowing
    mass = ((right / xi) ** (a + 1) - (left / xi) ** (a + 1)) * xi / ((a + 1) * h)
    stiff = ((left / xi) ** a + (right / xi) ** a) / h**2
    diagonal = (stiff + delta / xi + xi**2) / mass
    coupling = (right[:-1] / xi[:-1]) ** (0.5 * a) * (right[:-1] / xi[1:]) ** (0.5 * a)
    off_diagonal = -coupling / (h**2 * np.sqrt(mass[:-1] * mass[1:]))
    return TridiagonalMatrix(diagonal=diagonal, off_diagonal=off_diagonal)


def lowest_eigenvalues(matrix, k):
    """The ``k`` smallest eigenvalues, ascending."""
    if not 1 <= k <= matrix.size:
        raise InvalidInputError(f"k must lie in [1, {matrix.size}], got {k}")
    if matrix.size == 1:
        return matrix.diagonal.copy()
    return eigh_tridiagonal(
        matrix.diagonal,
        matrix.off_diagonal,
        eigvals_only=True,
        select="i",
        select_range=(0, k - 1),
    )


def verify_mode(mode, grid=None, tol=DEFAULT_TOL):
    """Look for the mode's predicted eigenvalue among the ``2n + 4`` lowest."""
    grid = grid or GridSpec()
    predicted = mode.reduced_eigenvalue
    matrix = discretize_radial_operator(mode.gamma_abs, mode.delta_root, grid)
    k = min(2 * mode.n + 4, matrix.size)
    eigenvalues = lowest_eigenvalues(matrix, k)
    matched = eigenvalues[np.argmin(np.abs(eigenvalues - predicted))]
    error = abs(matched - predicted) / predicted
    return OracleReport(
        predicted_lambda=predicted,
        matched_lambda=float(matched),
        relative_error=float(error),
        grid=grid,
        passed=bool(error < tol),
    )
