import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from kgcoulomb.errors import InvalidInputError
from kgcoulomb.params import (
    ModelParams,
    beta_squared,
    derive_delta,
    derive_gamma,
    derive_params,
    energy_from_theta_condition,
    omega_from_delta,
    reduced_eigenvalue,
    theta_from_beta,
)

masses = st.floats(min_value=1e-3, max_value=1e3)
couplings = st.floats(min_value=-50, max_value=50).filter(lambda f: abs(f) > 1e-6)
omegas = st.floats(min_value=1e-4, max_value=1e4)
ells = st.integers(min_value=-20, max_value=20)


@pytest.mark.parametrize("l, f, expected", [(0, 1, 1.0), (3, 4, 5.0), (-2, 0, 2.0)])
def test_derive_gamma(l, f, expected):
    assert derive_gamma(l, f) == expected


def test_derive_delta():
    assert derive_delta(1, 1, 1) == 2.0
    assert derive_delta(1, 0, 0.5) == 0.0
    assert derive_delta(1, 1, 2 / 3) == pytest.approx(math.sqrt(6), rel=1e-15)
    assert derive_delta(1, -1, 2 / 3) < 0


@pytest.mark.parametrize("m, omega", [(0, 1), (-1, 1), (1, 0), (1, -2)])
def test_derive_delta_rejects_nonpositive(m, omega):
    with pytest.raises(InvalidInputError):
        derive_delta(m, 1, omega)


def test_omega_from_delta():
    assert omega_from_delta(1, 1, 2) == 1.0
    assert omega_from_delta(1, 1, math.sqrt(6)) == pytest.approx(2 / 3, rel=1e-15)
    for bad in (-math.sqrt(6), 0.0):
        with pytest.raises(InvalidInputError):
            omega_from_delta(1, 1, bad)


def test_energy_from_theta_condition():
    e_plus, e_minus = energy_from_theta_condition(1, 2 / 3, 1, 1)
    assert e_plus == pytest.approx(math.sqrt(13 / 3), rel=1e-15)
    assert e_minus == -e_plus
    assert energy_from_theta_condition(1, 1e-12, 1, 1)[0] == pytest.approx(1.0, abs=1e-11)
    assert energy_from_theta_condition(2, 1, 1, 0)[0] == pytest.approx(math.sqrt(10), rel=1e-15)


def test_model_params_validation():
    ModelParams(1, 0, 0, 0)
    ModelParams(1, 0.3, -2, 1)
    with pytest.raises(InvalidInputError, match="ground state"):
        ModelParams(1, 0.3, 0, 0)
    with pytest.raises(InvalidInputError):
        ModelParams(0, 1, 0, 1)
    with pytest.raises(InvalidInputError):
        ModelParams(1, 1, 0, -1)


@given(masses, couplings, omegas)
def test_delta_round_trip(m, f, omega):
    back = omega_from_delta(m, f, derive_delta(m, f, omega))
    assert back == pytest.approx(omega, rel=1e-14)


@given(ells, st.floats(min_value=-1e3, max_value=1e3))
def test_gamma_symmetry(l, f):
    g = derive_gamma(l, f)
    assert g == derive_gamma(-l, f) == derive_gamma(l, -f)
    assert g >= 0


@given(masses, couplings, omegas, ells, st.integers(min_value=1, max_value=30))
def test_theta_condition_consistency(m, f, omega, l, n):
    g = derive_gamma(l, f)
    e_plus, _ = energy_from_theta_condition(m, omega, n, g)
    reduced = beta_squared(m, omega, e_plus) / (m * omega)
    assert reduced == pytest.approx(reduced_eigenvalue(n, g), rel=1e-12, abs=1e-12 * e_plus**2 / (m * omega))
    theta = theta_from_beta(m, omega, beta_squared(m, omega, e_plus), g)
    assert theta == pytest.approx(2 * n, abs=1e-12 * e_plus**2 / (m * omega))


def test_derive_params_invariants():
    p = ModelParams(1.5, -0.7, 3, 2)
    d = derive_params(p, 0.4, 2.0)
    assert d.gamma_abs**2 == pytest.approx(3**2 + 0.7**2, rel=1e-15)
    assert d.alpha >= 1
    assert d.delta < 0
    assert d.beta_sq == pytest.approx(4.0 - 2.25 + 0.6)
