import cmath
import math

import mpmath as mp
import numpy as np
import pytest
from hypothesis import given, strategies as st

from conftest import cell_point, mp_E, mp_theta, random_tau, rel
from ellipdkp.curve import CurveParams, p_of_u
from ellipdkp.elliptic import (
    S, S_prime, S_tau, eisenstein, eisenstein_du, g_function, half_period_identity_residual, half_tau_collapse,
    key_identity_residual, phi_pair, phi_pair_factorized, sprime1_residual, theta4_0_sq, wp_prime,
)
from ellipdkp.errors import BranchCrossing, NearPole
from ellipdkp.theta import ModularParam, theta_const

PI = math.pi
taus = st.builds(complex, st.floats(-0.5, 0.5), st.floats(0.6, 2.0))
cell = st.tuples(st.floats(-0.45, 0.45), st.floats(-0.45, 0.45))


def _clear(u, tau, c=0.05):
    m = ModularParam(tau)
    from ellipdkp.theta import lattice_distance

    return min(lattice_distance(u, m, w) for w in m.half_periods()) > c


# --- E-functions

def test_e2_special_values():
    tau = 0.2 + 1.1j
    assert abs(eisenstein(2, 0, tau)) < 1e-15
    assert rel(eisenstein(2, tau / 2, tau), -1j * PI) < 1e-13


@pytest.mark.parametrize("a", [1, 2, 3, 4])
def test_eisenstein_against_mpmath(a, rng):
    for _ in range(10):
        tau = random_tau(rng)
        u = cell_point(rng, tau)
        assert rel(eisenstein(a, u, tau), mp_E(a, u, tau)) < 1e-12


@given(taus, cell)
def test_eisenstein_periods(tau, ab):
    u = ab[0] + ab[1] * tau
    if not _clear(u, tau):
        return
    for a in (1, 2, 3, 4):
        e = eisenstein(a, u, tau)
        assert rel(eisenstein(a, u + 1, tau), e) < 1e-11
        assert rel(eisenstein(a, u + tau, tau), e - 2j * PI) < 1e-11


@given(taus, cell)
def test_eisenstein_half_tau_shift(tau, ab):
    u = ab[0] + ab[1] * tau
    if not _clear(u, tau):
        return
    assert rel(eisenstein(1, u + tau / 2, tau), eisenstein(4, u, tau) - 1j * PI) < 1e-11
    assert rel(eisenstein(4, u + tau / 2, tau), eisenstein(1, u, tau) - 1j * PI) < 1e-11
    assert rel(eisenstein_du(4, u + tau / 2, tau, 1), eisenstein_du(1, u, tau, 1)) < 1e-11


def test_near_pole_guard():
    tau = 1j
    with pytest.raises(NearPole) as info:
        eisenstein(1, 1e-10, tau)
    assert info.value.location == pytest.approx(1e-10)
    with pytest.raises(NearPole):
        eisenstein(4, tau / 2 + 1 + 1e-12, tau)
    eisenstein(1, 1e-6, tau)


def test_e1_double_pole_of_derivative():
    assert abs(1e-6 * -eisenstein_du(1, 1e-3, 1j, 1) - 1) < 1e-5


def test_eisenstein_du_finite_difference(rng):
    h = 1e-4
    for _ in range(10):
        tau = random_tau(rng)
        u = cell_point(rng, tau)
        for a in (1, 4):
            fd = (eisenstein(a, u + h, tau) - eisenstein(a, u - h, tau)) / (2 * h)
            assert rel(eisenstein_du(a, u, tau, 1), fd) < 1e-6
            fd2 = (eisenstein_du(a, u + h, tau, 1) - eisenstein_du(a, u - h, tau, 1)) / (2 * h)
            assert rel(eisenstein_du(a, u, tau, 2), fd2) < 1e-5


def test_eisenstein_du_order_validation():
    with pytest.raises(ValueError):
        eisenstein_du(1, 0.1, 1j, 3)


def test_eisenstein_tau_law(rng):
    h = 1e-4
    for _ in range(10):
        tau = random_tau(rng)
        u = cell_point(rng, tau)
        fd = (eisenstein(1, u, tau + h) - eisenstein(1, u, tau - h)) / (2 * h)
        e, e1, e2 = eisenstein(1, u, tau), eisenstein_du(1, u, tau, 1), eisenstein_du(1, u, tau, 2)
        assert rel(4j * PI * fd, 2 * e * e1 + e2) < 1e-5


# --- S

def test_s_base_point():
    tau = 0.1 + 1.2j
    v = S(0.5, tau)
    assert v.base_point == 0.5
    assert complex(v) == pytest.approx(cmath.log(theta_const(2, tau) / theta_const(3, tau)), abs=1e-14)


def test_s_tau_periodic():
    tau = 1.1j
    for u in (0.3 + 0.2j, 0.7 - 0.1j, 0.45 + 0.5j):
        assert abs(complex(S(u + tau, tau)) - complex(S(u, tau))) < 1e-12


def test_s_shift_by_one():
    tau = 1.1j
    for u in (0.3 - 0.2j, 0.1 - 0.4j):
        assert abs(complex(S(u + 1, tau)) - complex(S(u, tau)) - 1j * PI) < 1e-12
    # above the real axis the anchored branch turns the other way
    for u in (0.3 + 0.2j, 0.1 + 0.4j):
        assert abs(complex(S(u + 1, tau)) - complex(S(u, tau)) + 1j * PI) < 1e-12


def test_s_matches_log_ratio_mod_2pi_i(rng):
    for _ in range(10):
        tau = random_tau(rng)
        u = cell_point(rng, tau)
        try:
            v = complex(S(u, tau))
        except BranchCrossing:
            continue
        ref = mp_theta(1, u, tau) / mp_theta(4, u, tau)
        k = (v - cmath.log(ref)).imag / (2 * PI)
        assert abs(k - round(k)) < 1e-12 and abs(cmath.exp(v) - ref) / abs(ref) < 1e-12


def test_s_derivative_matches_sprime():
    tau = 0.2 + 1.0j
    u, h = 0.35 + 0.15j, 1e-5
    fd = (complex(S(u + h, tau)) - complex(S(u - h, tau))) / (2 * h)
    assert rel(fd, S_prime(u, tau)) < 1e-8


def test_s_branch_crossing():
    tau = 1j
    with pytest.raises(BranchCrossing):
        S(-0.5, tau)  # the segment from 1/2 passes through 0
    with pytest.raises(BranchCrossing):
        S(-0.5 + tau, tau)  # midpoint tau/2 is a zero of theta_4
    S(0.5 + tau, tau)  # midpoint (1 + tau)/2 only zeros theta_3
    S(-0.5, tau, path=[0.5 - 0.3j, -0.5 - 0.3j])


# --- S'

def test_sprime_residue():
    assert abs(1e-4 * S_prime(1e-4, 1j) - 1) < 1e-6


def test_sprime_vs_e_difference(rng):
    for _ in range(20):
        tau = random_tau(rng)
        u = cell_point(rng, tau)
        assert rel(S_prime(u, tau), eisenstein(1, u, tau) - eisenstein(4, u, tau)) < 1e-11
        assert rel(S_prime(u, tau), mp_E(1, u, tau) - mp_E(4, u, tau)) < 1e-11


def test_sprime_zeros():
    tau = 0.3 + 1.1j
    assert abs(S_prime((1 + tau) / 2, tau)) < 1e-11
    assert abs(S_prime(0.5, tau)) < 1e-11


def test_sprime_theta_constants():
    for tau in (1j, 0.4 + 0.7j, -0.3 + 1.9j):
        assert sprime1_residual(tau) < 1e-11


def test_sprime_vectorized():
    u = np.array([0.1 + 0.2j, 0.3 - 0.1j])
    out = S_prime(u, 1j)
    assert out.shape == (2,)
    assert out[0] == pytest.approx(S_prime(u[0], 1j))


# --- tau derivative

def test_s_tau_against_finite_difference(rng):
    h = 1e-4
    for _ in range(10):
        tau = random_tau(rng)
        u = cell_point(rng, tau)
        r = lambda t: mp_theta(1, u, t) / mp_theta(4, u, t)  # noqa: E731
        fd = cmath.log(r(tau + h) / r(tau - h)) / (2 * h)
        assert rel(S_tau(u, tau), fd) < 1e-5


def test_s_tau_against_mpmath_derivative():
    tau, u = 0.13 + 1.1j, 0.31 + 0.22j
    with mp.workdps(30):
        q = lambda t: mp.exp(1j * mp.pi * t)  # noqa: E731
        f = lambda t: mp.log(mp.jtheta(1, mp.pi * u, q(t)) / mp.jtheta(4, mp.pi * u, q(t)))  # noqa: E731
        ref = complex(mp.diff(f, mp.mpc(tau)))
    assert rel(S_tau(u, tau), ref) < 1e-12


def test_s_tau_lattice_shift(rng):
    for _ in range(10):
        tau = random_tau(rng)
        u = cell_point(rng, tau)
        assert rel(S_tau(u + tau, tau) - S_tau(u, tau), -S_prime(u, tau)) < 1e-10


def test_g_vanishes(rng):
    for _ in range(50):
        tau = random_tau(rng)
        u = cell_point(rng, tau)
        g, scale = g_function(u, tau)
        assert abs(g) < 1e-11 * max(1.0, scale)


# --- phi and the key identity

def test_phi_definition_vs_factorization(rng):
    for _ in range(50):
        tau = random_tau(rng)
        x1, x2 = cell_point(rng, tau), cell_point(rng, tau)
        try:
            a = phi_pair(x1, x2, tau, check=False)
            b = phi_pair_factorized(x1, x2, tau)
        except NearPole:
            continue
        assert rel(a, b) < 1e-11


def test_phi_against_direct_e_sum():
    tau, x1, x2 = 0.13 + 1.1j, 0.31 + 0.22j, -0.17 + 0.41j
    ref = -mp_E(1, x1, tau) - mp_E(4, x1, tau) + mp_E(1, x2, tau) + mp_E(4, x2, tau) + 2 * mp_E(2, x1 - x2, tau)
    assert rel(phi_pair(x1, x2, tau), ref) < 1e-12


def test_key_identity_random(rng):
    worst = 0.0
    n = 0
    while n < 100:
        tau = random_tau(rng)
        x1, x2 = cell_point(rng, tau), cell_point(rng, tau)
        try:
            worst = max(worst, key_identity_residual(x1, x2, tau))
        except NearPole:
            continue
        n += 1
    assert worst < 1e-10


def test_key_identity_coincident_points():
    with pytest.raises(NearPole):
        key_identity_residual(0.2 + 0.1j, 0.2 + 0.1j, 1j)


def test_key_identity_parity():
    tau, x1, x2 = 0.2 + 0.9j, 0.3 + 0.1j, -0.1 + 0.25j
    assert abs(key_identity_residual(x1, x2, tau) - key_identity_residual(-x1, -x2, tau)) < 1e-11


# --- wp'

def test_wp_prime_properties():
    tau = 0.2 + 1.1j
    u = 0.3 + 0.2j
    assert rel(wp_prime(-u, tau), -wp_prime(u, tau)) < 1e-12
    assert abs(wp_prime(0.5, tau)) < 1e-10
    assert abs(wp_prime(tau / 2, tau)) < 1e-10
    assert abs(1e-6 * wp_prime(1e-2, tau) + 2) < 1e-3


# --- collapse and the half-period identity

def test_half_tau_collapse_random(rng):
    for _ in range(50):
        tau = random_tau(rng)
        assert half_tau_collapse(cell_point(rng, tau), tau) < 1e-11


def test_half_tau_collapse_special_points():
    tau = 1.2j
    assert half_tau_collapse(0.5, tau) < 1e-12
    assert half_tau_collapse(1e-6, tau) < 1e-9


def test_half_period_identity(rng):
    for _ in range(30):
        tau = random_tau(rng)
        assert half_period_identity_residual(cell_point(rng, tau), tau) < 1e-10


def test_theta4_square_constant():
    assert theta4_0_sq(1j) == pytest.approx(theta_const(4, 1j) ** 2)


def test_c1_sprime_reproduces_p(rng):
    for _ in range(20):
        tau = random_tau(rng)
        cp = CurveParams(rng.uniform(0.2, 2.0), ModularParam(tau))
        u = cell_point(rng, tau)
        assert rel(cp.c1 * S_prime(u, cp.m), p_of_u(u, cp)) < 1e-12
