"""
Power-series solution of the biconfluent Heun equation

    xi H'' + (alpha - 2 xi^2) H' + (theta xi - delta) H = 0

where alpha = 2|gamma| + 1. With ``a_0 = 1`` and
``a_1 = delta / alpha`` the coefficients obey the three-term recurrence

    a_{j+2} = [delta a_{j+1} - (theta - 2 j) a_j] / [(j + 2)(j + 1 + alpha)].

Coefficients can be generated for a fixed ``delta`` or kept symbolic in
``delta`` (dense ascending-power vectors), which is what the quantization
root finder works on.
"""

import math
from dataclasses import dataclass

import numpy as np
from numpy.polynomial import polynomial as P

from .errors import InvalidInputError, SeriesTruncationError

MAX_TERMS = 10_000
TAIL_RUN = 5


@dataclass(frozen=True)
class SeriesCoefficients:
    alpha: float
    theta: float
    delta: float
    coeffs: np.ndarray

    def terminated_degree(self, rtol=1e-10):
        """Degree of the polynomial if the series terminates, else ``None``.

        Termination needs ``theta = 2k`` for an integer ``k`` together with
        ``a_{k+1} = 0``; after that every later coefficient vanishes.
        """
        half = self.theta / 2.0
        if half < 0 or half != math.floor(half):
            return None
        k = int(half)
        if k + 1 >= len(self.coeffs):
            return None
        scale = np.max(np.abs(self.coeffs[: k + 1]))
        if abs(self.coeffs[k + 1]) <= rtol * scale:
            return k
        return None


@dataclass(frozen=True)
class CoefficientPolynomials:
    alpha: float
    theta: float
    polys: list

    def evaluate(self, j, delta):
        return P.polyval(delta, self.polys[j])


def _step(alpha, theta, j, delta, a_j, a_j1):
    return (delta * a_j1 - (theta - 2 * j) * a_j) / ((j + 2) * (j + 1 + alpha))


def generate_coefficients(alpha, theta, delta, count):
    """First ``count`` series coefficients ``a_0 .. a_{count-1}``."""
    if alpha < 1:
        raise InvalidInputError(f"alpha must be >= 1, got {alpha}")
    if count < 2:
        raise InvalidInputError(f"count must be >= 2, got {count}")
    a = np.empty(count)
    a[0] = 1.0
    a[1] = delta / alpha
    for j in range(count - 2):
        a[j + 2] = _step(alpha, theta, j, delta, a[j], a[j + 1])
    return SeriesCoefficients(alpha, theta, delta, a)


def coefficient_with_derivative(alpha, theta, delta, index):
    """``a_index`` and its derivative with respect to ``delta``.

    Works for complex ``delta``; used as the Newton oracle when refining
    roots of ``a_{n+1}(delta)``.
    """
    a_prev, a_cur = 1.0, delta / alpha
    d_prev, d_cur = 0.0, 1.0 / alpha
    if index == 0:
        return a_prev, d_prev
    for j in range(index - 1):
        denom = (j + 2) * (j + 1 + alpha)
        a_next = (delta * a_cur - (theta - 2 * j) * a_prev) / denom
        d_next = (a_cur + delta * d_cur - (theta - 2 * j) * d_prev) / denom
        a_prev, a_cur = a_cur, a_next
        d_prev, d_cur = d_cur, d_next
    return a_cur, d_cur


def coefficient_polynomials(alpha, theta, n_max):
    """Each ``a_j`` for ``j = 0 .. n_max`` as a polynomial in ``delta``.

    ``polys[j]`` holds ascending-power coefficients and has length ``j + 1``.
    Only powers with the parity of ``j`` are nonzero.
    """
    if n_max < 1:
        raise InvalidInputError(f"n_max must be >= 1, got {n_max}")
    polys = [np.array([1.0]), np.array([0.0, 1.0 / alpha])]
    for j in range(n_max - 1):
        shifted = np.concatenate(([0.0], polys[j + 1]))
        lower = np.zeros(j + 3)
        lower[: j + 1] = polys[j]
        polys.append((shifted - (theta - 2 * j) * lower) / ((j + 2) * (j + 1 + alpha)))
    return CoefficientPolynomials(alpha, theta, polys)


def evaluate_H(coeffs, xi, tail_tolerance=1e-15):
    """Sum ``H(xi) = sum_j a_j xi^j``.

    A terminated series is evaluated as an exact polynomial. Otherwise the
    recurrence is continued until ``TAIL_RUN`` consecutive terms fall below
    ``tail_tolerance`` (relative to the partial sum when that exceeds one),
    raising :class:`SeriesTruncationError` if that never happens within
    ``MAX_TERMS`` terms.
    """
    if xi < 0:
        raise InvalidInputError(f"xi must be non-negative, got {xi}")
    degree = coeffs.terminated_degree()
    if degree is not None:
        return float(P.polyval(xi, coeffs.coeffs[: degree + 1]))

    alpha, theta, delta = coeffs.alpha, coeffs.theta, coeffs.delta
    a = [float(v) for v in coeffs.coeffs]
    return _sum_series(a, alpha, theta, delta, xi, tail_tolerance)


def _sum_series(a, alpha, theta, delta, xi, tail_tolerance):
    total = 0.0
    run = 0
    power = 1.0
    term = 0.0
    for j in range(MAX_TERMS):
        if j >= len(a):
            a.append(_step(alpha, theta, j - 2, delta, a[j - 2], a[j - 1]))
        term = a[j] * power
        if not math.isfinite(term):
            raise SeriesTruncationError(
                f"series overflowed at xi={xi} after {j} terms", bound=math.inf
            )
        total += term
        power *= xi
        if abs(term) < tail_tolerance * max(1.0, abs(total)):
            run += 1
            if run >= TAIL_RUN:
                return total
        else:
            run = 0
    raise SeriesTruncationError(
        f"series did not converge at xi={xi} within {MAX_TERMS} terms; "
        f"last term {abs(term):.3e}",
        bound=abs(term),
    )
