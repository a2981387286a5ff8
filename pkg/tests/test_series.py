import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from kgcoulomb.errors import InvalidInputError, SeriesTruncationError
from kgcoulomb.quantization import termination_roots
from kgcoulomb.series import (
    coefficient_polynomials,
    coefficient_with_derivative,
    evaluate_H,
    generate_coefficients,
)

from oracles import DELTA, exact_coefficients

alphas = st.floats(min_value=1, max_value=10)
reals = st.floats(min_value=-10, max_value=10, allow_subnormal=False)


def test_ground_state_coefficients_terminate():
    c = generate_coefficients(3, 2, math.sqrt(6), 4).coeffs
    assert c[0] == 1.0
    assert c[1] == pytest.approx(math.sqrt(6) / 3, rel=1e-15)
    assert c[2] == pytest.approx(0, abs=1e-15)
    assert c[3] == pytest.approx(0, abs=1e-15)


def test_trivial_and_closed_form_coefficients():
    np.testing.assert_array_equal(generate_coefficients(1, 0, 0, 3).coeffs, [1, 0, 0])
    c = generate_coefficients(3, 4, 1, 3).coeffs
    assert c[1] == pytest.approx(1 / 3, rel=1e-15)
    assert c[2] == pytest.approx(-11 / 24, rel=1e-15)


def test_generate_rejects_bad_input():
    with pytest.raises(InvalidInputError):
        generate_coefficients(0.5, 0, 0, 3)
    with pytest.raises(InvalidInputError):
        generate_coefficients(1, 0, 0, 1)


def test_coefficient_polynomials_examples():
    polys = coefficient_polynomials(3, 2, 2).polys
    np.testing.assert_allclose(polys[0], [1.0])
    np.testing.assert_allclose(polys[1], [0, 1 / 3], rtol=1e-15)
    # a_2 = delta^2/24 - theta/(2(1+alpha)) = delta^2/24 - 1/4
    np.testing.assert_allclose(polys[2], [-1 / 4, 0, 1 / 24], rtol=1e-15)


def test_polynomials_match_exact_sympy():
    alpha, theta = 7, 6
    polys = coefficient_polynomials(alpha, theta, 8).polys
    exact = exact_coefficients(alpha, theta, 9)
    for j, expr in enumerate(exact):
        ref = [float(expr.coeff(DELTA, k)) for k in range(j + 1)]
        np.testing.assert_allclose(polys[j], ref, rtol=1e-13, atol=1e-300)


def test_polynomial_degree_and_parity_structure():
    polys = coefficient_polynomials(2.3, 5.1, 10).polys
    for j, p in enumerate(polys):
        assert len(p) == j + 1
        assert p[-1] != 0
        wrong_parity = p[(j + 1) % 2 :: 2]
        assert np.all(wrong_parity == 0)


@given(alphas, reals, reals)
def test_a1_a2_closed_forms(alpha, theta, delta):
    c = generate_coefficients(alpha, theta, delta, 3).coeffs
    a2 = delta**2 / (2 * alpha * (1 + alpha)) - theta / (2 * (1 + alpha))
    assert c[1] == pytest.approx(delta / alpha, rel=1e-13)
    # a2 can cancel to zero; compare against the size of its two terms
    scale = abs(delta**2 / (2 * alpha * (1 + alpha))) + abs(theta / (2 * (1 + alpha)))
    assert abs(c[2] - a2) <= 1e-13 * max(scale, 1e-300)


@settings(max_examples=30)
@given(alphas, reals, st.lists(reals, min_size=100, max_size=100))
def test_symbolic_numeric_equivalence(alpha, theta, deltas):
    cp = coefficient_polynomials(alpha, theta, 10)
    for delta in deltas:
        numeric = generate_coefficients(alpha, theta, delta, 11).coeffs
        for j in range(11):
            # compare against the magnitude of the terms summed, not the (possibly cancelled) value
            scale = np.polynomial.polynomial.polyval(abs(delta), np.abs(cp.polys[j]))
            assert abs(cp.evaluate(j, delta) - numeric[j]) <= 1e-12 * scale


@given(alphas, reals, st.integers(min_value=0, max_value=12))
def test_polynomial_parity(alpha, delta, j):
    cp = coefficient_polynomials(alpha, 1.7, 12)
    assert cp.evaluate(j, -delta) == pytest.approx((-1) ** j * cp.evaluate(j, delta), rel=1e-12, abs=1e-300)


@pytest.mark.parametrize("n", range(1, 9))
def test_termination_cascade(n):
    alpha = 2 * math.sqrt(2) + 1
    for delta in termination_roots(alpha, n):
        c = generate_coefficients(alpha, 2 * n, delta, n + 12).coeffs
        c /= np.max(np.abs(c))
        assert np.all(np.abs(c[n + 1 :]) < 1e-12), c[n + 1 :]


def test_derivative_matches_finite_difference():
    alpha, theta, delta, h = 3.4, 6.0, 1.3, 1e-6
    for j in range(6):
        _, d = coefficient_with_derivative(alpha, theta, delta, j)
        up, _ = coefficient_with_derivative(alpha, theta, delta + h, j)
        dn, _ = coefficient_with_derivative(alpha, theta, delta - h, j)
        assert d == pytest.approx((up - dn) / (2 * h), rel=1e-7, abs=1e-9)


def test_evaluate_H_terminated():
    mode = generate_coefficients(3, 2, math.sqrt(6), 4)
    assert mode.terminated_degree() == 1
    assert evaluate_H(mode, 0.0) == 1.0
    assert evaluate_H(mode, 1.0) == pytest.approx(1 + math.sqrt(6) / 3, rel=1e-15)


def test_evaluate_H_constant_degenerate_case():
    # theta = 0 with delta = 0 leaves only a_0; theta = 2 would not (a_2 != 0)
    assert generate_coefficients(4.0, 2, 0, 3).coeffs[2] == pytest.approx(-2 / (2 * 5))
    c = generate_coefficients(4.0, 0, 0, 3)
    assert evaluate_H(c, 2.0) == 1.0


def test_evaluate_H_non_terminated_sums_recurrence():
    # delta = 0, theta = 2: only even terms, a_{2k+2} = (4k - 2) a_{2k} / ((2k+2)(2k+1+alpha))
    alpha, xi = 1.0, 1.5
    c = generate_coefficients(alpha, 2.0, 0.0, 4)
    assert c.terminated_degree() is None
    terms, a, k = [], 1.0, 0
    while abs(a) > 1e-30 or k < 10:
        terms.append(a * xi ** (2 * k))
        a = a * (4 * k - 2) / ((2 * k + 2) * (2 * k + 1 + alpha))
        k += 1
    assert evaluate_H(c, xi) == pytest.approx(math.fsum(terms), rel=1e-13)


def test_evaluate_H_truncation_error():
    c = generate_coefficients(1.0, -3.0, 2.0, 4)
    with pytest.raises(SeriesTruncationError) as info:
        evaluate_H(c, 200.0)
    assert info.value.bound > 0
