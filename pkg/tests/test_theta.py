import cmath
import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from conftest import brute_theta, cell_point, mp_theta, random_tau, rel
from ellipdkp.errors import DomainError, TruncationExceeded
from ellipdkp.theta import (
    ModularParam, TruncationPolicy, half_period, lattice_distance, theta, theta1_product, theta_const, theta_du,
    theta_index, theta_table, zero_offset,
)

taus = st.builds(complex, st.floats(-0.5, 0.5), st.floats(0.6, 2.0))
cell = st.tuples(st.floats(-0.5, 0.5), st.floats(-0.5, 0.5))


# --- modular parameter and policy

def test_modular_param_caches_nome():
    m = ModularParam(0.1 + 1.2j)
    assert m.q == pytest.approx(cmath.exp(1j * math.pi * (0.1 + 1.2j)))
    assert m.half().tau == pytest.approx(0.05 + 0.6j)


@pytest.mark.parametrize("tau", [0.5, 0.3 - 0.1j, 0.01j])
def test_modular_param_rejects_bad_tau(tau):
    with pytest.raises(DomainError):
        ModularParam(tau)


def test_truncation_policy_validation():
    with pytest.raises(DomainError):
        TruncationPolicy(eps=0.0)
    with pytest.raises(DomainError):
        TruncationPolicy(max_terms=0)


def test_truncation_exceeded_when_cap_too_small():
    with pytest.raises(TruncationExceeded):
        theta(3, 0.1, 0.3j, TruncationPolicy(max_terms=2))


def test_index_is_cyclic():
    assert theta_index(5) == 1 and theta_index(0) == 4 and theta_index(-1) == 3
    u, tau = 0.2 + 0.1j, 1.1j
    assert theta(5, u, tau) == theta(1, u, tau)


def test_half_periods():
    m = ModularParam(0.2 + 1.0j)
    assert half_period(2, m) == pytest.approx((1.2 + 1.0j) / 2)
    assert zero_offset(1, m) == 0
    assert zero_offset(4, m) == pytest.approx(m.tau / 2)


# --- values

def test_theta1_vanishes_at_origin():
    assert abs(theta(1, 0, 1j)) == 0.0


def test_theta3_large_im_tau():
    assert abs(theta(3, 0, 40j) - 1) < 1e-15


def test_theta2_against_brute_window():
    u, tau = 0.3 + 0.1j, 0.2 + 1.1j
    assert rel(theta(2, u, tau), brute_theta(2, u, tau)) < 1e-12


@pytest.mark.parametrize("a", [1, 2, 3, 4])
def test_all_thetas_against_brute_window(a, rng):
    for _ in range(20):
        tau = random_tau(rng)
        u = cell_point(rng, tau)
        assert rel(theta(a, u, tau), brute_theta(a, u, tau)) < 1e-12


@given(taus, cell, st.integers(1, 4))
def test_against_mpmath(tau, ab, a):
    u = ab[0] + ab[1] * tau
    assert rel(theta(a, u, tau), mp_theta(a, u, tau)) < 1e-12


@pytest.mark.parametrize("order", [1, 2, 3])
@pytest.mark.parametrize("a", [1, 2, 3, 4])
def test_derivatives_against_mpmath(a, order, rng):
    for _ in range(5):
        tau = random_tau(rng)
        u = cell_point(rng, tau)
        assert rel(theta_du(a, u, tau, order=order), mp_theta(a, u, tau, order)) < 1e-11


def test_reduction_far_from_cell():
    tau = 0.15 + 0.9j
    u = 0.3 + 3.7 * tau + 5
    for a in (1, 2, 3, 4):
        for d in (0, 1, 2, 3):
            got = theta_table(u, tau)[a - 1, d]
            ref = mp_theta(a, u, tau, d, dps=40)
            assert abs(got - ref) / abs(ref) < 1e-11


def test_overflow_is_a_domain_error():
    with pytest.raises(DomainError):
        theta(3, 400j, 0.7j)


def test_theta_du_order_validation():
    with pytest.raises(DomainError):
        theta_du(1, 0.1, 1j, order=4)


def test_theta1_prime_at_zero():
    tau = 0.3 + 0.8j
    expected = math.pi * theta_const(2, tau) * theta_const(3, tau) * theta_const(4, tau)
    assert rel(theta_du(1, 0, tau, order=1), expected) < 1e-13


def test_even_theta_derivatives_vanish_at_zero():
    for tau in (1j, 0.4 + 0.7j):
        assert abs(theta_du(2, 0, tau, order=1)) < 1e-14
        assert abs(theta_du(3, 0, tau, order=1)) < 1e-14


def test_second_derivative_finite_difference(rng):
    h = 1e-4
    for _ in range(10):
        tau = random_tau(rng)
        u = cell_point(rng, tau)
        fd = (theta(1, u + h, tau) - 2 * theta(1, u, tau) + theta(1, u - h, tau)) / h ** 2
        assert rel(theta_du(1, u, tau, order=2), fd) < 1e-6


# --- constants

def test_theta_constants():
    tau = 0.1 + 1.3j
    assert theta_const(1, tau) == 0
    assert rel(theta_const(4, tau) ** 2, theta_const(3, tau / 2) * theta_const(4, tau / 2)) < 1e-12
    assert rel(theta_const(2, 40j), 2 * math.exp(-10 * math.pi)) < 1e-15


# --- product oracle

def test_product_matches_series(rng):
    for _ in range(100):
        tau = random_tau(rng)
        u = cell_point(rng, tau)
        assert rel(theta1_product(u, tau), theta(1, u, tau)) < 1e-12


def test_product_zeros():
    assert theta1_product(0, 1j) == 0
    assert abs(theta1_product(1, 0.2 + 1j)) < 1e-12


def test_product_truncation():
    with pytest.raises(TruncationExceeded):
        theta1_product(0.1, 0.6j, TruncationPolicy(max_terms=2))


# --- invariants

@given(taus, cell)
def test_parity(tau, ab):
    u = ab[0] + ab[1] * tau
    t = theta_table(np.array([u, -u]), tau)[:, :, 0]
    assert rel(t[1, 0], -t[0, 0]) < 1e-12
    for a in (1, 2, 3):
        assert rel(t[1, a], t[0, a]) < 1e-12


@given(taus, cell)
def test_quasi_periodicity_unreduced(tau, ab):
    u = ab[0] + ab[1] * tau
    t = theta_table(np.array([u, u + 1, u + tau]), tau, reduce=False)[:, :, 0]
    fac = cmath.exp(-1j * math.pi * tau - 2j * math.pi * u)
    for a, (s1, st_) in enumerate(zip((-1, -1, 1, 1), (-1, 1, 1, -1))):
        assert rel(t[1, a], s1 * t[0, a]) < 1e-11
        assert rel(t[2, a], st_ * fac * t[0, a]) < 1e-11


@given(taus, cell)
def test_half_period_shifts(tau, ab):
    u = ab[0] + ab[1] * tau
    e = cmath.exp(-1j * math.pi * tau / 4 - 1j * math.pi * u)
    th = lambda a, x: theta(a, x, tau)  # noqa: E731
    assert rel(th(1, u + 0.5), th(2, u)) < 1e-11
    assert rel(th(3, u + 0.5), th(4, u)) < 1e-11
    assert rel(th(1, u + (1 + tau) / 2), e * th(3, u)) < 1e-11
    assert rel(th(2, u + (1 + tau) / 2), -1j * e * th(4, u)) < 1e-11
    assert rel(th(1, u + tau / 2), 1j * e * th(4, u)) < 1e-11
    assert rel(th(2, u + tau / 2), e * th(3, u)) < 1e-11


@pytest.mark.parametrize("tau", [1j, 0.3 + 0.7j, -0.4 + 1.9j])
def test_zeros_at_half_periods(tau):
    m = ModularParam(tau)
    for a in (1, 2, 3, 4):
        w = zero_offset(a, m)
        assert abs(theta(a, w, m)) < 1e-14
        far = w + 1 + m.tau
        assert abs(theta(a, far, m)) < 1e-13 * abs(theta(a, far + 0.1, m))


@given(taus, cell)
def test_heat_equation(tau, ab):
    u = ab[0] + ab[1] * tau
    h = 1e-4
    for a in (1, 2, 3, 4):
        fd = (theta(a, u, tau + h) - theta(a, u, tau - h)) / (2 * h)
        assert rel(4j * math.pi * fd, theta_du(a, u, tau, order=2)) < 1e-5


@given(taus, cell)
def test_duplication(tau, ab):
    u = ab[0] + ab[1] * tau
    c = theta_const(2, tau / 2)
    assert rel(2 * theta(1, u, tau) * theta(4, u, tau), c * theta(1, u, tau / 2)) < 1e-11
    assert rel(2 * theta(2, u, tau) * theta(3, u, tau), c * theta(2, u, tau / 2)) < 1e-11


def test_lattice_distance():
    m = ModularParam(0.3 + 1j)
    assert lattice_distance(2 + 3 * m.tau + 0.01, m) == pytest.approx(0.01)
    assert lattice_distance(0.5, m, 0.5) == 0.0
    d = lattice_distance(np.array([0.0, 0.25]), m)
    assert d.shape == (2,) and d[1] == pytest.approx(0.25)


def test_table_shape():
    t = theta_table(np.zeros((2, 3)), 1j)
    assert t.shape == (2, 3, 4, 4)
