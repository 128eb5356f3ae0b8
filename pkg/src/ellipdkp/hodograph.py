"""Hodograph solutions tau(t) of the one-variable reduction.

The speeds phi_k(xi(tau)|tau) come from a Löwner pre-pass that co-evolves
the series u(z) over a tau bracket on the imaginary axis. The hodograph
relation is

    [t0] + sum_k t_k phi_k(tau) = Phi(tau)

with the t0 term switched by ``include_t0``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

import numpy as np
from scipy.optimize import bisect

from .elliptic import POLE_GUARD, S_prime
from .errors import DomainError, NoConvergence, NoSignChange, OrderMismatch
from .loewner import DrivingFunction, TauPath, evolve, seed_series
from .series import TruncatedSeries, b_prime_coeffs, phi_k
from .theta import ModularParam

ROOT_TOL = 1e-10
FD_STEP = 1e-5
SERIES_GUARD_ORDERS = 2


@dataclass(frozen=True)
class TimeVector:
    t0: float
    t: tuple  # t_1..t_K

    def __post_init__(self):
        object.__setattr__(self, "t0", float(self.t0))
        object.__setattr__(self, "t", tuple(float(x) for x in self.t))
        if not self.t:
            raise DomainError("need at least t_1")

    @property
    def K(self) -> int:
        return len(self.t)

    def scaled(self, c) -> "TimeVector":
        return TimeVector(c * self.t0, tuple(c * x for x in self.t))

    def shifted(self, k: int, h: float) -> "TimeVector":
        """t with t_k moved by h (k = 0 is t0)."""
        if k == 0:
            return TimeVector(self.t0 + h, self.t)
        t = list(self.t)
        t[k - 1] += h
        return TimeVector(self.t0, tuple(t))

    @property
    def scale(self) -> float:
        return max(1.0, abs(self.t0), *(abs(x) for x in self.t))


class SpeedTable:
    """Series state over a tau bracket, with dense output by a partial RK4 step."""

    def __init__(self, drv: DrivingFunction, tau_lo: complex, tau_hi: complex, N: int = 12,
                 gamma0: float = 1.0, steps: int = 500, series0: TruncatedSeries | None = None):
        tau_lo, tau_hi = complex(tau_lo), complex(tau_hi)
        if tau_lo.real != 0 or tau_hi.real != 0 or not tau_lo.imag < tau_hi.imag:
            raise DomainError("speed bracket must be an increasing segment of the imaginary axis")
        series0 = seed_series(gamma0, N) if series0 is None else series0
        self.N = series0.N
        self.path = TauPath(tau_lo, tau_hi, steps)
        self.traj = evolve(self.path, drv, [0j], series0=series0, gamma0=gamma0)
        self.flow = self.traj.flow
        J = 1
        self._states = np.column_stack([self.traj.u, self.traj.log_R, self.traj.c0, self.traj.series[:, 1:]])
        self._tail = slice(J + 2, None)
        self.steps = steps

    @property
    def bracket(self):
        return self.path.start, self.path.end

    def _s_of(self, tau) -> float:
        tau = complex(tau)
        s = (tau - self.path.start) / self.path.delta
        if abs(s.imag) > 1e-12 or not (-1e-12 <= s.real <= 1 + 1e-12):
            raise DomainError(f"tau={tau} outside the speed bracket {self.bracket}")
        return min(max(s.real, 0.0), 1.0)

    def series_at(self, tau) -> TruncatedSeries:
        s = self._s_of(tau)
        ds = 1.0 / self.steps
        i = min(int(s / ds), self.steps - 1)
        y = self._states[i]
        rest = s - i * ds
        if rest > 0:
            y, _ = self.flow.step(i * ds, y, rest)
        return TruncatedSeries(np.concatenate([[0j], y[self._tail]]))

    def xi_at(self, tau) -> complex:
        return self.flow.xi(self._s_of(tau))

    def speeds(self, tau, K: int, guard: float = POLE_GUARD):
        if K > self.N - SERIES_GUARD_ORDERS:
            raise OrderMismatch(f"K={K} needs N >= K + {SERIES_GUARD_ORDERS}, have N={self.N}")
        return phi_k(self.xi_at(tau), self.series_at(tau), ModularParam(complex(tau)), K, guard)


def phi_zero():
    def f(tau):
        return 0.0
    f.spec = {"kind": "zero"}
    return f


def phi_linear(a: float, b: float):
    """Phi(tau) = a + b Im(tau), i.e. a - i b tau on the imaginary axis."""
    def f(tau):
        return a + b * complex(tau).imag
    f.spec = {"kind": "linear", "a": a, "b": b}
    return f


@dataclass
class HodographProblem:
    speeds: SpeedTable
    Phi: Callable = field(default_factory=phi_zero)
    include_t0: bool = True

    @property
    def drv(self):
        return self.speeds.flow.drv


def objective(prob: HodographProblem, t: TimeVector, tau) -> complex:
    phi = prob.speeds.speeds(tau, t.K)
    val = float(np.dot(t.t, phi.real)) + 1j * float(np.dot(t.t, phi.imag))
    if prob.include_t0:
        val += t.t0
    return val - prob.Phi(tau)


def hodograph_solve(prob: HodographProblem, t: TimeVector, tau_bracket=None, tol: float = ROOT_TOL,
                    max_newton: int = 8) -> complex:
    """Root tau of the hodograph relation on an imaginary-axis bracket.

    Bisection in Im(tau) on the real part of the objective, then Newton
    polish with a central-difference derivative. The returned root has
    |objective| < tol.
    """
    lo, hi = prob.speeds.bracket if tau_bracket is None else (complex(tau_bracket[0]), complex(tau_bracket[1]))
    if lo.real != 0 or hi.real != 0:
        raise DomainError("tau_bracket must lie on the imaginary axis")

    def f(y):
        return objective(prob, t, 1j * y).real

    a, b = lo.imag, hi.imag
    fa, fb = f(a), f(b)
    if fa == 0 and fb == 0:
        raise NoSignChange(
            f"objective vanishes at both ends of [{lo}, {hi}]; with all t_k = 0 and Phi = 0 every tau is a root"
        )
    if fa == 0:
        return 1j * a
    if fb == 0:
        return 1j * b
    if np.sign(fa) == np.sign(fb):
        raise NoSignChange(
            f"objective has no sign change on [{lo}, {hi}] (f={fa:.3g}, {fb:.3g}); "
            "with all t_k = 0 and Phi = 0 every tau is a root"
        )
    y = bisect(f, a, b, xtol=1e-9, maxiter=200)
    d = 1e-6
    for _ in range(max_newton):
        fy = f(y)
        if fy == 0:
            break
        slope = (f(min(y + d, b)) - f(max(y - d, a))) / (min(y + d, b) - max(y - d, a))
        if slope == 0:
            break
        step = fy / slope
        y_new = min(max(y - step, a), b)
        if abs(y_new - y) < 4e-16 * abs(y):
            y = y_new
            break
        y = y_new
    res = abs(objective(prob, t, 1j * y))
    if res >= tol * max(1.0, t.scale):
        raise NoConvergence(f"hodograph root residual {res:.3g} exceeds {tol:g}")
    return 1j * y


def time_gradient(prob: HodographProblem, t: TimeVector, h: float = FD_STEP, tau_bracket=None):
    """Central differences d tau/d t_k, k = 0..K, with step h * t.scale."""
    hh = h * t.scale
    out = np.empty(t.K + 1, dtype=np.complex128)
    for k in range(t.K + 1):
        up = hodograph_solve(prob, t.shifted(k, hh), tau_bracket)
        dn = hodograph_solve(prob, t.shifted(k, -hh), tau_bracket)
        out[k] = (up - dn) / (2 * hh)
    return out


def hydrodynamic_defect(prob, t, k, h=FD_STEP, tau_bracket=None, grad=None, root=None):
    """d tau/d t_k - phi_k d tau/d t0 (signed)."""
    grad = time_gradient(prob, t, h, tau_bracket) if grad is None else grad
    root = hodograph_solve(prob, t, tau_bracket) if root is None else root
    phi = prob.speeds.speeds(root, t.K)
    return grad[k] - phi[k - 1] * grad[0]


def hydrodynamic_residual(prob: HodographProblem, t: TimeVector, k: int, h: float = FD_STEP,
                          tau_bracket=None, guard: float = 1e-14, grad=None, root=None) -> float:
    """|dtau/dt_k - phi_k dtau/dt0| / (|dtau/dt_k| + guard)."""
    if not 1 <= k <= t.K:
        raise DomainError(f"k must be in 1..{t.K}")
    if not prob.include_t0:
        raise DomainError("the t0-free hodograph relation gives dtau/dt0 = 0; use t0_independence")
    grad = time_gradient(prob, t, h, tau_bracket) if grad is None else grad
    d = hydrodynamic_defect(prob, t, k, h, tau_bracket, grad, root)
    return float(abs(d) / (abs(grad[k]) + guard))


def t0_independence(prob: HodographProblem, t: TimeVector, h: float = FD_STEP, tau_bracket=None) -> float:
    """|dtau/dt0|; zero when the relation carries no t0 term."""
    hh = h * t.scale
    up = hodograph_solve(prob, t.shifted(0, hh), tau_bracket)
    dn = hodograph_solve(prob, t.shifted(0, -hh), tau_bracket)
    return float(abs(up - dn) / (2 * hh))


def _nabla_and_rhs(prob, t, z, grad, root, truncated):
    z = complex(z)
    K = t.K
    k = np.arange(1, K + 1)
    lhs = grad[0] + np.sum(z ** (-k) * grad[1:] / k)
    xi = prob.speeds.xi_at(root)
    m = ModularParam(complex(root))
    s0 = S_prime(xi, m)
    ser = prob.speeds.series_at(root)
    if truncated:
        bp = b_prime_coeffs(xi, ser, m, K)
        num = s0 + np.sum(z ** (-k) * bp / k)
    else:
        num = S_prime(ser(z) + xi, m)
    return lhs, num / s0 * grad[0]


def generating_defect(prob, t, z, h=FD_STEP, tau_bracket=None, grad=None, root=None, truncated=False):
    """nabla(z) tau - S'(u(z)+xi)/S'(xi) dtau/dt0, nabla truncated at K.

    With ``truncated`` the right side uses the same K-term expansion in 1/z,
    so the defect is a polynomial of degree K in 1/z without constant term.
    """
    grad = time_gradient(prob, t, h, tau_bracket) if grad is None else grad
    root = hodograph_solve(prob, t, tau_bracket) if root is None else root
    lhs, rhs = _nabla_and_rhs(prob, t, z, grad, root, truncated)
    return lhs - rhs


def generating_residual(prob, t, z, h=FD_STEP, tau_bracket=None, guard: float = 1e-14, grad=None, root=None) -> float:
    grad = time_gradient(prob, t, h, tau_bracket) if grad is None else grad
    root = hodograph_solve(prob, t, tau_bracket) if root is None else root
    lhs, rhs = _nabla_and_rhs(prob, t, z, grad, root, False)
    return float(abs(lhs - rhs) / (abs(lhs) + guard))


def defect_coefficients(prob, t, zs, h=FD_STEP, tau_bracket=None, grad=None, root=None):
    """Recover the 1/z^k coefficients (k = 1..K) of the truncated generating defect
    from K samples by solving the Vandermonde system."""
    zs = np.asarray(zs, dtype=np.complex128)
    if zs.size != t.K:
        raise DomainError(f"need exactly K={t.K} sample points")
    grad = time_gradient(prob, t, h, tau_bracket) if grad is None else grad
    root = hodograph_solve(prob, t, tau_bracket) if root is None else root
    vals = np.array([generating_defect(prob, t, z, h, tau_bracket, grad, root, truncated=True) for z in zs])
    V = (1 / zs)[:, None] ** np.arange(1, t.K + 1)[None, :]
    return np.linalg.solve(V, vals)


def homogeneity_residual(prob: HodographProblem, t: TimeVector, factors=(0.5, 2.0, 5.0), tau_bracket=None) -> float:
    """max |tau(c t) - tau(t)| over the scale factors (needs Phi = 0)."""
    base = hodograph_solve(prob, t, tau_bracket)
    return max(abs(hodograph_solve(prob, t.scaled(c), tau_bracket) - base) for c in factors)


__all__ = [
    "TimeVector", "SpeedTable", "HodographProblem", "phi_zero", "phi_linear", "objective",
    "hodograph_solve", "time_gradient", "hydrodynamic_defect", "hydrodynamic_residual", "t0_independence",
    "generating_defect", "generating_residual", "defect_coefficients", "homogeneity_residual",
]
