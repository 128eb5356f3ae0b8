"""Jacobi theta functions theta_a(u|tau), a = 1..4, for complex arguments.

Conventions: q = exp(i*pi*tau) and

    theta_1(u) = 2 sum_{n>=0} (-1)^n q^{(n+1/2)^2} sin((2n+1) pi u)
    theta_2(u) = 2 sum_{n>=0} q^{(n+1/2)^2} cos((2n+1) pi u)
    theta_3(u) = 1 + 2 sum_{n>=1} q^{n^2} cos(2 n pi u)
    theta_4(u) = 1 + 2 sum_{n>=1} (-1)^n q^{n^2} cos(2 n pi u)

so theta_a has its zeros on omega_{a-1} + Z + Z tau with omega = (0, 1/2,
(1+tau)/2, tau/2). Periods are 1 and tau (not pi and pi*tau).
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from math import comb

import numpy as np

from . import _kernels
from .errors import DomainError, TruncationExceeded

NOME_MAX = 0.95

# quasi-periodicity signs: theta_a(u+1) = T[a] theta_a(u),
# theta_a(u+tau) = S[a] exp(-i pi tau - 2 i pi u) theta_a(u)
_SHIFT1 = np.array([-1.0, -1.0, 1.0, 1.0])
_SHIFTTAU = np.array([-1.0, 1.0, 1.0, -1.0])


@dataclass(frozen=True)
class TruncationPolicy:
    eps: float = 1e-16
    max_terms: int = 64

    def __post_init__(self):
        if not (self.eps > 0 and math.isfinite(self.eps)):
            raise DomainError(f"eps must be positive, got {self.eps}")
        if self.max_terms < 1:
            raise DomainError(f"max_terms must be >= 1, got {self.max_terms}")


DEFAULT_POLICY = TruncationPolicy()


@dataclass(frozen=True)
class ModularParam:
    """Modular parameter tau (Im tau > 0) with cached nome q = exp(i pi tau)."""

    tau: complex
    q: complex = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        tau = complex(self.tau)
        if not (tau.imag > 0):
            raise DomainError(f"Im(tau) must be positive, got tau={tau}")
        q = cmath.exp(1j * math.pi * tau)
        if abs(q) > NOME_MAX:
            raise DomainError(f"|q| = {abs(q):.4f} exceeds {NOME_MAX} (tau={tau})")
        object.__setattr__(self, "tau", tau)
        object.__setattr__(self, "q", q)

    def half(self) -> "ModularParam":
        """The parameter tau/2."""
        return ModularParam(self.tau / 2)

    def half_periods(self):
        return (0j, 0.5 + 0j, (1 + self.tau) / 2, self.tau / 2)


def as_modular(m) -> ModularParam:
    if isinstance(m, ModularParam):
        return m
    return ModularParam(complex(m))


def theta_index(a: int) -> int:
    """Map any integer label onto 1..4 (indices are cyclic mod 4)."""
    return (int(a) - 1) % 4 + 1


def half_period(label: int, m) -> complex:
    m = as_modular(m)
    return m.half_periods()[int(label) % 4]


def zero_offset(a: int, m) -> complex:
    """omega_{a-1}: theta_a vanishes on this point shifted by the lattice."""
    return half_period(theta_index(a) - 1, m)


def lattice_distance(u, m, offset=0j):
    """Distance from u to the nearest point of offset + Z + Z tau."""
    m = as_modular(m)
    tau = m.tau
    d = np.asarray(u, dtype=np.complex128) - offset
    k = np.round(d.imag / tau.imag)
    d = d - k * tau
    d = d - np.round(d.real)
    nb = (np.array([-1, 0, 1])[:, None] + np.array([-1, 0, 1])[None, :] * tau).reshape(-1)
    best = np.min(np.abs(d[..., None] + nb), axis=-1)
    return best if best.ndim else float(best)


def _reduce(u, tau):
    k = np.round(u.imag / tau.imag)
    v = u - k * tau
    n = np.round(v.real)
    return v - n, k, n


def theta_table(u, m, tp: TruncationPolicy = DEFAULT_POLICY, reduce: bool = True):
    """All four theta functions and u-derivatives 0..3 at each point of ``u``.

    Returns an array of shape ``u.shape + (4, 4)``: ``[..., a-1, j]`` holds
    the j-th derivative of theta_a. With ``reduce`` the argument is first
    brought into the strip |Im v| <= Im(tau)/2, -1/2 <= Re v <= 1/2 and the
    quasi-periodicity factors are reapplied (Leibniz rule for derivatives).
    """
    m = as_modular(m)
    tau = m.tau
    u = np.asarray(u, dtype=np.complex128)
    shape = u.shape
    flat = u.reshape(-1)
    if reduce:
        v, k, n = _reduce(flat, tau)
    else:
        v, k, n = flat, np.zeros(flat.shape), np.zeros(flat.shape)
    out, used = _kernels.theta_block(v, tau, tp.eps, tp.max_terms)
    if used < 0:
        raise TruncationExceeded(
            f"theta series did not converge in {tp.max_terms} terms (tau={tau})"
        )
    if reduce and np.any(k != 0):
        sign = (_SHIFTTAU[None, :] ** k[:, None]) * (_SHIFT1[None, :] ** n[:, None])
        with np.errstate(over="ignore", invalid="ignore"):
            fac = np.exp(-1j * math.pi * k * k * tau - 2j * math.pi * k * v)
        lam = (-2j * math.pi * k)[:, None]
        raw = out.copy()
        for j in range(1, _kernels.NDERIV):
            acc = raw[:, :, j].copy()
            for i in range(j):
                acc += comb(j, i) * lam ** (j - i) * raw[:, :, i]
            out[:, :, j] = acc
        with np.errstate(over="ignore", invalid="ignore"):
            out *= (sign * fac[:, None])[:, :, None]
        if not np.all(np.isfinite(out)):
            raise DomainError(f"theta overflow: |Im u| too large relative to Im tau={tau.imag}")
    elif reduce and np.any(n != 0):
        out *= (_SHIFT1[None, :] ** n[:, None])[:, :, None]
    return out.reshape(shape + (4, _kernels.NDERIV))


def theta(a: int, u, m, tp: TruncationPolicy = DEFAULT_POLICY, reduce: bool = True):
    """theta_a(u|tau) from the q-series."""
    a = theta_index(a)
    tab = theta_table(u, m, tp, reduce)
    val = tab[..., a - 1, 0]
    return complex(val) if np.ndim(val) == 0 else val


def theta_du(a: int, u, m, tp: TruncationPolicy = DEFAULT_POLICY, order: int = 1, reduce: bool = True):
    """order-th u-derivative of theta_a by term-wise differentiation (order <= 3)."""
    if order not in (0, 1, 2, 3):
        raise DomainError(f"derivative order must be 0..3, got {order}")
    a = theta_index(a)
    tab = theta_table(u, m, tp, reduce)
    val = tab[..., a - 1, order]
    return complex(val) if np.ndim(val) == 0 else val


def theta_const(a: int, m, tp: TruncationPolicy = DEFAULT_POLICY) -> complex:
    return theta(a, 0.0, m, tp)


def theta1_product(u, m, tp: TruncationPolicy = DEFAULT_POLICY) -> complex:
    """theta_1 from its infinite product; independent of the series path.

    Terminates once all three factors of the current k differ from 1 by less
    than ``tp.eps``; hitting ``tp.max_terms`` raises TruncationExceeded.
    The product converges slowly when |Im u| is large compared with Im tau,
    so no argument reduction is attempted here.
    """
    m = as_modular(m)
    tau = m.tau
    u = complex(u)
    two_pi_i = 2j * math.pi
    val = 1j * cmath.exp(1j * math.pi * tau / 4 - 1j * math.pi * u)
    for k in range(1, tp.max_terms + 1):
        a = cmath.exp(two_pi_i * k * tau)
        b = cmath.exp(two_pi_i * ((k - 1) * tau + u))
        c = cmath.exp(two_pi_i * (k * tau - u))
        val *= (1 - a) * (1 - b) * (1 - c)
        if k > 1 and max(abs(a), abs(b), abs(c)) < tp.eps:
            return val
    raise TruncationExceeded(f"theta_1 product did not converge in {tp.max_terms} factors")
