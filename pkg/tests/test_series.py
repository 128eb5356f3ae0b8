import mpmath as mp
import numpy as np
import pytest
from hypothesis import given, strategies as st
from numpy.polynomial import Polynomial as P

from conftest import cell_point, dft_bprime_oracle, mp_sprime, random_tau
from ellipdkp.elliptic import S_prime
from ellipdkp.errors import NearPole, OrderMismatch, ZeroDenominator
from ellipdkp.series import (
    TruncatedSeries, b_prime_coeffs, b_prime_from_taylor, compose_analytic, phi_k, series_mul, sprime_taylor,
)
from ellipdkp.theta import ModularParam

coef = st.complex_numbers(max_magnitude=2.0, allow_nan=False, allow_infinity=False)


def _rand_series(rng, N, scale=0.1, c1=None):
    tail = scale * (rng.normal(size=N) + 1j * rng.normal(size=N))
    if c1 is not None:
        tail[0] = c1
    return TruncatedSeries.from_tail(tail)


# --- arithmetic

def test_monomial_product():
    z1 = TruncatedSeries.from_tail([1, 0, 0, 0])
    assert np.array_equal((z1 * z1).coeffs, [0, 0, 1, 0, 0])


def test_hand_expansion():
    s = TruncatedSeries.from_tail([1, 1, 0, 0, 0])
    assert np.array_equal((s ** 2).coeffs, [0, 0, 1, 2, 1, 0])


@given(st.lists(coef, min_size=6, max_size=6), st.lists(coef, min_size=6, max_size=6))
def test_mul_commutative(a, b):
    A, B = TruncatedSeries(a), TruncatedSeries(b)
    assert np.array_equal((A * B).coeffs, (B * A).coeffs)


@given(st.lists(coef, min_size=8, max_size=8), st.lists(coef, min_size=8, max_size=8), st.integers(1, 7))
def test_mul_commutes_with_truncation(a, b, n):
    A, B = TruncatedSeries(a), TruncatedSeries(b)
    lhs = (A * B).truncate(n).coeffs
    rhs = series_mul(A.truncate(n), B.truncate(n)).coeffs
    assert np.allclose(lhs, rhs, rtol=1e-14, atol=1e-14)


def test_mul_order_mismatch():
    with pytest.raises(OrderMismatch):
        TruncatedSeries.zeros(3) * TruncatedSeries.zeros(4)
    with pytest.raises(OrderMismatch):
        TruncatedSeries.zeros(3) + TruncatedSeries.zeros(4)


def test_power_matches_repeated_product(rng):
    s = _rand_series(rng, 8, 1.0)
    assert np.allclose((s ** 3).coeffs, (s * s * s).coeffs, rtol=1e-13)
    assert np.array_equal((s ** 0).coeffs, np.eye(1, 9).reshape(-1))


def test_scalar_ops_and_eval(rng):
    s = _rand_series(rng, 5, 1.0)
    z = 2.0 + 1.0j
    assert abs((s + 3)(z) - (s(z) + 3)) < 1e-14
    assert abs((2 * s)(z) - 2 * s(z)) < 1e-14
    assert abs((s - s)(z)) == 0


def test_series_immutable():
    s = TruncatedSeries.zeros(3)
    with pytest.raises(ValueError):
        s.coeffs[0] = 1


# --- composition

def test_compose_identity(rng):
    s = _rand_series(rng, 6)
    out = compose_analytic([2.5, 1, 0, 0, 0, 0, 0], s)
    assert np.allclose(out.coeffs, (s + 2.5).coeffs, rtol=0, atol=1e-15)


def test_compose_square():
    u0, c1 = 0.7, 1.3
    s = TruncatedSeries.from_tail([c1, 0, 0, 0])
    out = compose_analytic([u0 ** 2, 2 * u0, 1, 0, 0], s)
    assert np.allclose(out.coeffs, [u0 ** 2, 2 * u0 * c1, c1 ** 2, 0, 0], atol=1e-15)


def test_compose_cubic_brute_force(rng):
    for _ in range(10):
        f = rng.normal(size=4) + 1j * rng.normal(size=4)
        s = _rand_series(rng, 6, 1.0)
        # polynomial in w = 1/z, expanded in full then truncated
        sp = P(s.coeffs)
        full = P([f[0]]) + f[1] * sp + f[2] * sp ** 2 + f[3] * sp ** 3
        expect = np.zeros(7, dtype=complex)
        expect[: min(7, full.coef.size)] = full.coef[:7]
        out = compose_analytic(np.concatenate([f, np.zeros(3)]), s)
        assert np.allclose(out.coeffs, expect, rtol=1e-12, atol=1e-12)


def test_compose_associative(rng):
    # f(g(u0 + s) ) with g(u0) = g0 versus (f o g) composed directly
    for _ in range(5):
        f = rng.normal(size=7) + 1j * rng.normal(size=7)
        g = rng.normal(size=7) + 1j * rng.normal(size=7)
        s = _rand_series(rng, 6, 1.0)
        inner = compose_analytic(g, s) - g[0]
        two_step = compose_analytic(f, inner)
        gp = P(np.concatenate([[0], g[1:]]))
        fg = sum((f[j] * gp ** j for j in range(7)), P([0]))
        one_step = compose_analytic(fg.coef[:7], s)
        assert np.allclose(two_step.coeffs, one_step.coeffs, rtol=1e-11, atol=1e-11)


def test_compose_errors():
    s = TruncatedSeries.from_tail([1, 0, 0], c0=0.5)
    with pytest.raises(OrderMismatch):
        compose_analytic([1, 2, 3, 4], s)
    with pytest.raises(OrderMismatch):
        compose_analytic([1, 2], TruncatedSeries.from_tail([1, 0, 0]))


# --- S' Taylor data

def test_sprime_taylor_against_mpmath(rng):
    for _ in range(5):
        tau = random_tau(rng)
        m = ModularParam(tau)
        u0 = cell_point(rng, tau, 0.1)
        ours = sprime_taylor(u0, m, 6)
        with mp.workdps(30):
            ref = mp.taylor(lambda x: mp_sprime(x, tau), mp.mpc(u0), 6)
        for j in range(7):
            assert abs(ours[j] - complex(ref[j])) < 1e-9 * max(1, abs(complex(ref[j])))
        assert abs(ours[0] - S_prime(u0, m)) < 1e-13 * max(1, abs(ours[0]))


# --- B'_k

def test_b1_leading_order(rng):
    tau = 0.1 + 1.1j
    m = ModularParam(tau)
    u0 = cell_point(rng, tau, 0.1)
    s = _rand_series(rng, 6)
    b = b_prime_coeffs(u0, s, m, 4)
    s2 = sprime_taylor(u0, m, 1)[1]
    assert abs(b[0] - s.coeffs[1] * s2) < 1e-13 * max(1, abs(b[0]))


def test_b_zero_series():
    b = b_prime_coeffs(0.2 + 0.3j, TruncatedSeries.zeros(6), ModularParam(1j), 5)
    assert np.all(b == 0)


def test_b_linear_in_taylor(rng):
    m = ModularParam(1.2j)
    u0 = cell_point(rng, m.tau, 0.1)
    s = _rand_series(rng, 8)
    t = sprime_taylor(u0, m, 6)
    assert np.array_equal(b_prime_from_taylor(2 * t, s, 6), 2 * b_prime_from_taylor(t, s, 6))


def test_b_primedft_bprime_oracle(rng):
    worst = 0.0
    for _ in range(20):
        tau = random_tau(rng)
        u0 = cell_point(rng, tau, 0.15)
        s = _rand_series(rng, 8, 0.05, c1=complex(rng.uniform(0.1, 0.5)))
        ours = b_prime_coeffs(u0, s, ModularParam(tau), 4)
        ref = dft_bprime_oracle(u0, s, tau, 4)
        worst = max(worst, float(np.max(np.abs(ours - ref) / np.maximum(1, np.abs(ref)))))
    assert worst < 1e-7


def test_b_order_mismatch():
    with pytest.raises(OrderMismatch):
        b_prime_coeffs(0.2 + 0.3j, TruncatedSeries.zeros(3), ModularParam(1j), 4)


def test_b_near_pole():
    with pytest.raises(NearPole):
        b_prime_coeffs(1e-14, TruncatedSeries.zeros(4), ModularParam(1j), 2)


# --- phi_k

def test_phi1(rng):
    m = ModularParam(0.05 + 0.9j)
    u0 = cell_point(rng, m.tau, 0.1)
    s = _rand_series(rng, 6)
    t = sprime_taylor(u0, m, 1)
    assert abs(phi_k(u0, s, m, 3)[0] - s.coeffs[1] * t[1] / t[0]) < 1e-12 * max(1, abs(t[1] / t[0]))


def test_phi_zero_denominator():
    m = ModularParam(1j)
    with pytest.raises(ZeroDenominator):
        phi_k((1 + m.tau) / 2, TruncatedSeries.zeros(4), m, 2)
    with pytest.raises(ZeroDenominator):
        phi_k(0.5, TruncatedSeries.zeros(4), m, 2)


def test_phi_truncation_stability(rng):
    for _ in range(5):
        m = ModularParam(random_tau(rng))
        u0 = cell_point(rng, m.tau, 0.1)
        s12 = _rand_series(rng, 12)
        s8 = s12.truncate(8)
        a, b = phi_k(u0, s8, m, 6), phi_k(u0, s12, m, 6)
        assert np.max(np.abs(a - b) / np.maximum(1, np.abs(b))) < 1e-12
