"""Truncated power series in 1/z and their composition with analytic functions.

A ``TruncatedSeries`` holds c_0..c_N for u(z) = c_0 + sum_k c_k z^{-k}.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .elliptic import POLE_GUARD, _guard, _log_derivs
from .errors import OrderMismatch, ZeroDenominator
from .theta import as_modular, lattice_distance, theta_table, zero_offset

CAUCHY_SAMPLES = 64
CAUCHY_RADIUS_MAX = 0.25
CLOSED_FORM_ORDERS = 3  # Taylor orders 0..2 come from term-wise theta derivatives


@dataclass(frozen=True, eq=False)
class TruncatedSeries:
    coeffs: np.ndarray

    def __post_init__(self):
        c = np.array(self.coeffs, dtype=np.complex128).reshape(-1)
        if c.size < 1:
            raise OrderMismatch("a series needs at least the c_0 slot")
        c.flags.writeable = False
        object.__setattr__(self, "coeffs", c)

    @classmethod
    def from_tail(cls, tail, c0=0.0):
        """Build from c_1..c_N (and optionally c_0)."""
        return cls(np.concatenate([[c0], np.asarray(tail, dtype=np.complex128)]))

    @classmethod
    def zeros(cls, N):
        return cls(np.zeros(N + 1))

    @property
    def N(self) -> int:
        return self.coeffs.size - 1

    @property
    def c0(self) -> complex:
        return complex(self.coeffs[0])

    def truncate(self, N):
        if N > self.N:
            return TruncatedSeries(np.concatenate([self.coeffs, np.zeros(N - self.N)]))
        return TruncatedSeries(self.coeffs[: N + 1])

    def __add__(self, other):
        if isinstance(other, TruncatedSeries):
            _same_order(self, other)
            return TruncatedSeries(self.coeffs + other.coeffs)
        c = self.coeffs.copy()
        c[0] += other
        return TruncatedSeries(c)

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-1) * other

    def __mul__(self, other):
        if isinstance(other, TruncatedSeries):
            return series_mul(self, other)
        return TruncatedSeries(self.coeffs * other)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("only non-negative integer powers")
        out = TruncatedSeries(np.eye(1, self.N + 1).reshape(-1))
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __call__(self, z):
        """Evaluate the (polynomial in 1/z) series at z."""
        w = 1.0 / np.asarray(z, dtype=np.complex128)
        return np.polyval(self.coeffs[::-1], w)

    def __repr__(self):
        return f"TruncatedSeries(N={self.N}, coeffs={np.array2string(self.coeffs, precision=4)})"


def _same_order(a, b):
    if a.N != b.N:
        raise OrderMismatch(f"truncation orders differ: {a.N} vs {b.N}")


def series_mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    _same_order(a, b)
    x, y = a.coeffs, b.coeffs
    # canonical operand order keeps the floating-point sum bitwise symmetric
    if x.tobytes() > y.tobytes():
        x, y = y, x
    return TruncatedSeries(np.convolve(x, y)[: a.N + 1])


def compose_analytic(f_taylor, s: TruncatedSeries, order: int | None = None) -> TruncatedSeries:
    """f(u0 + s(z)) for f given by Taylor coefficients [f_0, f_1, ...] at u0.

    Requires s.c0 == 0. Horner's scheme in the series ring, truncated at
    ``order`` (default s.N); needs at least order+1 Taylor coefficients.
    """
    order = s.N if order is None else int(order)
    if s.c0 != 0:
        raise OrderMismatch("composition needs c_0 = 0 (expand around the value at z = infinity)")
    f = np.asarray(f_taylor, dtype=np.complex128)
    if f.size < order + 1:
        raise OrderMismatch(f"need {order + 1} Taylor coefficients, got {f.size}")
    s = s.truncate(order)
    acc = np.zeros(order + 1, dtype=np.complex128)
    for fj in f[order::-1]:
        acc = np.convolve(acc, s.coeffs)[: order + 1]
        acc[0] += fj
    return TruncatedSeries(acc)


def log_deriv_taylor(combo, u0, m, order: int, guard: float = POLE_GUARD, radius: float | None = None):
    """Taylor coefficients at u0 of sum_a w_a E^(a)(u) up to ``order``.

    ``combo`` is a sequence of (a, w_a). Orders 0..2 are closed form (from
    theta derivatives up to third order); higher orders come from a Cauchy
    integral over a circle sampled at CAUCHY_SAMPLES points, evaluated by FFT.
    The circle radius defaults to half the distance to the nearest pole,
    capped at CAUCHY_RADIUS_MAX.
    """
    m = as_modular(m)
    u0 = complex(u0)
    labels = tuple(a for a, _ in combo)
    _guard(u0, m, labels, guard)
    order = int(order)
    out = np.zeros(order + 1, dtype=np.complex128)
    tab0 = theta_table(u0, m)
    for a, wgt in combo:
        e, e1, e2 = _log_derivs(tab0[a - 1])
        closed = (e, e1, e2 / 2)
        for j in range(min(order, CLOSED_FORM_ORDERS - 1) + 1):
            out[j] += wgt * closed[j]
    if order >= CLOSED_FORM_ORDERS:
        if radius is None:
            dist = min(float(lattice_distance(u0, m, zero_offset(a, m))) for a in labels)
            radius = min(CAUCHY_RADIUS_MAX, 0.5 * dist)
        k = np.arange(CAUCHY_SAMPLES)
        pts = u0 + radius * np.exp(2j * np.pi * k / CAUCHY_SAMPLES)
        tab = theta_table(pts, m)
        vals = np.zeros(CAUCHY_SAMPLES, dtype=np.complex128)
        for a, wgt in combo:
            vals += wgt * tab[:, a - 1, 1] / tab[:, a - 1, 0]
        coef = np.fft.fft(vals) / CAUCHY_SAMPLES
        j = np.arange(CLOSED_FORM_ORDERS, order + 1)
        out[CLOSED_FORM_ORDERS:] = coef[j] / radius ** j
    return out


def sprime_taylor(u0, m, order: int, guard: float = POLE_GUARD):
    """Taylor coefficients of S' = E^(1) - E^(4) at u0."""
    return log_deriv_taylor(((1, 1.0), (4, -1.0)), u0, m, order, guard)


def b_prime_from_taylor(taylor, s: TruncatedSeries, K: int):
    """B'_k = k [z^-k] sum_j taylor_j s(z)^j, k = 1..K."""
    if K > s.N:
        raise OrderMismatch(f"K={K} exceeds series order N={s.N}")
    comp = compose_analytic(np.asarray(taylor)[: K + 1], s, order=K)
    k = np.arange(1, K + 1)
    return k * comp.coeffs[1:]


def b_prime_coeffs(u0, s: TruncatedSeries, m, K: int, guard: float = POLE_GUARD):
    """Coefficients in S'(u(z) + u0) = S'(u0) + sum_k z^-k B'_k(u0) / k."""
    if K > s.N:
        raise OrderMismatch(f"K={K} exceeds series order N={s.N}")
    return b_prime_from_taylor(sprime_taylor(u0, m, K, guard), s, K)


def phi_k(u0, s: TruncatedSeries, m, K: int, guard: float = POLE_GUARD):
    """Hydrodynamic speeds phi_k = B'_k(u0) / S'(u0), k = 1..K."""
    m = as_modular(m)
    for a in (2, 3):
        if lattice_distance(u0, m, zero_offset(a, m)) < guard:
            raise ZeroDenominator(f"S'(u0) vanishes at u0={u0} (zero of theta_{a})")
    taylor = sprime_taylor(u0, m, K, guard)
    if taylor[0] == 0:
        raise ZeroDenominator(f"S'(u0) = 0 at u0={u0}")
    return b_prime_from_taylor(taylor, s, K) / taylor[0]
