"""Elliptic uniformization of the curve p^2 = R^2 (w + 1/w) + V.

    w(u) = theta_4(u)^2 / theta_1(u)^2
    p(u) = gamma theta_4(0)^2 theta_2(u) theta_3(u) / (theta_1(u) theta_4(u))
    R = gamma theta_2(0) theta_3(0),   V = -gamma^2 (theta_2(0)^4 + theta_3(0)^4)
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field

import numpy as np
from scipy.optimize import bisect

from .elliptic import POLE_GUARD, PI, S_prime, _guard, residual
from .errors import ConsistencyError, DegeneratePair, DomainError, NoConvergence, OutOfRange
from .theta import ModularParam, as_modular, theta_table

# Below this Im(tau) the modulus ratio minus 2 falls under ~1e-6 and can no
# longer be inverted to 1e-10.
MODULUS_Y_MIN = 0.35
MODULUS_Y_MAX = 40.0


@dataclass(frozen=True)
class CurveParams:
    gamma: complex
    m: ModularParam
    R: complex = field(init=False)
    V: complex = field(init=False)

    def __post_init__(self):
        m = as_modular(self.m)
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "gamma", complex(self.gamma))
        tab = theta_table(0j, m)
        t2, t3 = tab[1, 0], tab[2, 0]
        object.__setattr__(self, "R", complex(self.gamma * t2 * t3))
        object.__setattr__(self, "V", complex(-self.gamma ** 2 * (t2 ** 4 + t3 ** 4)))

    @property
    def c1(self) -> complex:
        """Leading coefficient of u(z) = c1/z + ..., equal to gamma/pi."""
        return self.gamma / PI

    @property
    def real_regime(self) -> bool:
        return self.m.tau.real == 0 and self.gamma.imag == 0 and self.gamma.real > 0

    @classmethod
    def from_tau(cls, gamma, tau):
        return cls(gamma, as_modular(tau))


def _wp(u, cp):
    tab = theta_table(u, cp.m)
    t40 = complex(theta_table(0j, cp.m)[3, 0])
    w = (tab[..., 3, 0] / tab[..., 0, 0]) ** 2
    p = cp.gamma * t40 ** 2 * tab[..., 1, 0] * tab[..., 2, 0] / (tab[..., 0, 0] * tab[..., 3, 0])
    return w, p


def _out(x):
    return complex(x) if np.ndim(x) == 0 else x


def w_of_u(u, cp: CurveParams, guard: float = POLE_GUARD):
    _guard(u, cp.m, (1,), guard)
    return _out(_wp(u, cp)[0])


def p_of_u(u, cp: CurveParams, guard: float = POLE_GUARD):
    _guard(u, cp.m, (1, 4), guard)
    return _out(_wp(u, cp)[1])


def curve_constant(u, cp: CurveParams, guard: float = POLE_GUARD):
    """p^2 - R^2 (w + 1/w); independent of u and equal to V."""
    _guard(u, cp.m, (1, 4), guard)
    w, p = _wp(u, cp)
    return _out(p * p - cp.R ** 2 * (w + 1 / w))


def curve_residual(u, cp: CurveParams, guard: float = POLE_GUARD):
    """|p^2 - R^2 (w + 1/w) - V| / (|p^2| + |V| + 1)."""
    _guard(u, cp.m, (1, 4), guard)
    w, p = _wp(u, cp)
    p2 = p * p
    r = np.abs(p2 - cp.R ** 2 * (w + 1 / w) - cp.V) / (np.abs(p2) + abs(cp.V) + 1)
    return float(r) if np.ndim(r) == 0 else r


def ratio_identity_residual(u1, u2, cp: CurveParams, guard: float = POLE_GUARD) -> float:
    """Residual of

        (w1 - w2)/(p1 + p2) = -theta_4(u1) theta_4(u2) theta_1(u1-u2)
                              / (gamma theta_2(0) theta_3(0) theta_1(u1) theta_1(u2) theta_4(u1-u2))
    """
    u1 = complex(u1)
    u2 = complex(u2)
    _guard([u1, u2], cp.m, (1, 4), guard)
    _guard(u1 - u2, cp.m, (4,), guard, "u1-u2")
    w, p = _wp(np.array([u1, u2]), cp)
    den = p[0] + p[1]
    if abs(den) < guard * (abs(p[0]) + abs(p[1]) + 1):
        raise DegeneratePair(f"p(u1) + p(u2) vanishes for u1={u1}, u2={u2}")
    lhs = (w[0] - w[1]) / den
    tab = theta_table(np.array([u1, u2, u1 - u2]), cp.m)
    rhs = (-(tab[0, 3, 0] * tab[1, 3, 0] * tab[2, 0, 0])
           / (cp.R * tab[0, 0, 0] * tab[1, 0, 0] * tab[2, 3, 0]))
    return residual(lhs, rhs)


def product_identity_residual(u1, u2, cp: CurveParams, guard: float = POLE_GUARD) -> float:
    """Residual of p1^2 - p2^2 = R^2 (w1 - w2)(1 - 1/(w1 w2)).

    This is the product of the two pair relations with the z-dependence
    removed; it says p^2 - R^2 (w + 1/w) is the same at both points.
    """
    _guard([u1, u2], cp.m, (1, 4), guard)
    w, p = _wp(np.array([complex(u1), complex(u2)]), cp)
    lhs = p[0] ** 2 - p[1] ** 2
    rhs = cp.R ** 2 * (w[0] - w[1]) * (1 - 1 / (w[0] * w[1]))
    scale = max(1.0, abs(p[0]) ** 2, abs(p[1]) ** 2)
    return float(abs(lhs - rhs) / scale)


def _seed_guess(w_target, m, n=24):
    tau = m.tau
    a = (np.arange(n) + 0.5) / n
    grid = (a[:, None] + a[None, :] * tau).reshape(-1) - 0.5 - tau / 2
    tab = theta_table(grid, m)
    w = (tab[:, 3, 0] / tab[:, 0, 0]) ** 2
    f = np.abs(np.log(w_target / w))
    return complex(grid[np.argmin(f)])


def u_from_w(w_target, m, u_guess=None, guard: float = POLE_GUARD, tol: float = 1e-12, max_iter: int = 50):
    """Solve w(u) = w_target by Newton iteration in the S coordinate.

    Iterates on f(u) = (1/2) Log(w_target / w(u)), i.e. S(u) + (1/2) log w_target
    reduced modulo i*pi, whose u-derivative is S'(u). Without ``u_guess`` a
    coarse grid over the fundamental cell picks the start.
    """
    m = as_modular(m)
    w_target = complex(w_target)
    if w_target == 0:
        raise DomainError("w_target must be nonzero")
    u = _seed_guess(w_target, m) if u_guess is None else complex(u_guess)
    _guard(u, m, (1, 4), guard)
    max_step = 0.25 * min(1.0, m.tau.imag)
    for _ in range(max_iter):
        tab = theta_table(u, m)
        w = (tab[3, 0] / tab[0, 0]) ** 2
        f = 0.5 * cmath.log(w_target / w)
        if abs(f) < tol:
            return u
        du = f / S_prime(u, m, guard)
        if abs(du) > max_step:
            du *= max_step / abs(du)
        u = u - du
        _guard(u, m, (1, 4), guard)
    raise NoConvergence(f"u_from_w did not converge in {max_iter} iterations (w={w_target})")


def modulus_ratio(m) -> complex:
    """theta_2(0)^2/theta_3(0)^2 + theta_3(0)^2/theta_2(0)^2, which equals -V/R^2."""
    tab = theta_table(0j, as_modular(m))
    x = (tab[1, 0] / tab[2, 0]) ** 2
    return complex(x + 1 / x)


def tau_from_modulus(ratio: float, y_min: float = MODULUS_Y_MIN, y_max: float = MODULUS_Y_MAX) -> ModularParam:
    """Purely imaginary tau = i y with modulus_ratio(tau) = ratio."""
    ratio = float(ratio)

    def f(y):
        return modulus_ratio(1j * y).real - ratio

    lo_val, hi_val = f(y_min), f(y_max)
    if not (lo_val < 0 < hi_val):
        raise OutOfRange(
            f"ratio {ratio} outside [{ratio + lo_val:.12g}, {ratio + hi_val:.6g}] "
            f"(Im tau in [{y_min}, {y_max}])"
        )
    ys = np.geomspace(y_min, y_max, 64)
    vals = np.array([f(y) for y in ys])
    if not np.all(np.diff(vals) > 0):
        raise ConsistencyError("modulus ratio is not monotone on the bracket")
    i = int(np.searchsorted(vals, 0.0))
    y = bisect(f, ys[i - 1], ys[i], xtol=1e-15, rtol=4 * np.finfo(float).eps, maxiter=200)
    if abs(f(y)) > 1e-12 * ratio:
        raise NoConvergence(f"tau_from_modulus residual {abs(f(y)):.3g} for ratio {ratio}")
    return ModularParam(1j * y)
