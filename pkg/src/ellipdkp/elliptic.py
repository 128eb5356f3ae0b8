"""Logarithmic derivatives of theta functions and the function S = log(theta_1/theta_4).

E^(a)(u) = theta_a'(u)/theta_a(u). S(u) is multivalued; it is continued
from the base point u = 1/2 along straight segments, where it equals the
principal value log(theta_2(0)/theta_3(0)).

Residual helpers return ``|lhs - rhs| / max(1, |lhs|, |rhs|)``.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .errors import BranchCrossing, ConsistencyError, DomainError, NearPole
from .theta import as_modular, lattice_distance, theta_index, theta_table, zero_offset

POLE_GUARD = 1e-8
CROSSCHECK_TOL = 1e-11
PI = math.pi


def residual(lhs, rhs, floor=1.0):
    lhs = np.asarray(lhs)
    rhs = np.asarray(rhs)
    scale = np.maximum(np.maximum(np.abs(lhs), np.abs(rhs)), floor)
    out = np.abs(lhs - rhs) / scale
    return float(out) if out.ndim == 0 else out


def _guard(u, m, labels, guard, what="u"):
    u = np.asarray(u, dtype=np.complex128)
    for a in labels:
        d = lattice_distance(u, m, zero_offset(a, m))
        if np.any(np.asarray(d) < guard):
            bad = u.reshape(-1)[np.argmin(np.asarray(d).reshape(-1))]
            raise NearPole(f"{what}={complex(bad)} is within {guard:g} of a zero of theta_{a}", location=complex(bad))


def _scalar(x):
    return complex(x) if np.ndim(x) == 0 else x


def _log_derivs(tab):
    """E, E', E'' for all four thetas from a theta table [..., a, j]."""
    t0, t1, t2, t3 = (tab[..., j] for j in range(4))
    e = t1 / t0
    e1 = t2 / t0 - e * e
    e2 = t3 / t0 - 3 * e * t2 / t0 + 2 * e ** 3
    return e, e1, e2


def eisenstein(a: int, u, m, guard: float = POLE_GUARD):
    """E^(a)(u|tau) = d/du log theta_a(u|tau)."""
    m = as_modular(m)
    a = theta_index(a)
    _guard(u, m, (a,), guard)
    tab = theta_table(u, m)
    return _scalar(tab[..., a - 1, 1] / tab[..., a - 1, 0])


def eisenstein_du(a: int, u, m, order: int = 1, guard: float = POLE_GUARD):
    """First or second u-derivative of E^(a)."""
    if order not in (1, 2):
        raise DomainError(f"order must be 1 or 2, got {order}")
    m = as_modular(m)
    a = theta_index(a)
    _guard(u, m, (a,), guard)
    tab = theta_table(u, m)
    _, e1, e2 = _log_derivs(tab[..., a - 1, :])
    return _scalar(e1 if order == 1 else e2)


def theta4_0_sq(m) -> complex:
    return complex(theta_table(0j, m)[3, 0]) ** 2


# ---------------------------------------------------------------- S(u|tau)

@dataclass(frozen=True)
class BranchedLogValue:
    value: complex
    base_point: complex
    path: tuple

    def __complex__(self):
        return complex(self.value)


def _segment_clearance(a, b, m, labels):
    """Smallest distance from segment [a, b] to the zeros of the given thetas."""
    tau = m.tau
    lo_i = min(a.imag, b.imag) - abs(tau.imag) - 1
    hi_i = max(a.imag, b.imag) + abs(tau.imag) + 1
    kmin = math.floor(lo_i / tau.imag) - 1
    kmax = math.ceil(hi_i / tau.imag) + 1
    best = math.inf
    seg = b - a
    L2 = abs(seg) ** 2
    for lab in labels:
        off = zero_offset(lab, m)
        for k in range(kmin, kmax + 1):
            base = off + k * tau
            lo_r = min(a.real, b.real) - base.real - 2
            hi_r = max(a.real, b.real) - base.real + 2
            n = np.arange(math.floor(lo_r), math.ceil(hi_r) + 1)
            pts = base + n
            if L2 == 0:
                d = np.abs(pts - a)
            else:
                t = np.clip(((pts - a) * seg.conjugate()).real / L2, 0.0, 1.0)
                d = np.abs(pts - (a + t * seg))
            best = min(best, float(d.min()))
    return best


def _ratio14(points, m):
    tab = theta_table(points, m)
    return tab[..., 0, 0] / tab[..., 3, 0]


def S(u, m, path=None, guard: float = POLE_GUARD) -> BranchedLogValue:
    """Continue log(theta_1/theta_4) from u = 1/2 to ``u``.

    ``path`` optionally lists intermediate vertices; consecutive vertices are
    joined by straight segments. Passing within ``guard`` of a zero of
    theta_1 or theta_4 raises BranchCrossing.
    """
    m = as_modular(m)
    u = complex(u)
    verts = [0.5 + 0j] + [complex(p) for p in (path or ())] + [u]
    for a, b in zip(verts[:-1], verts[1:]):
        if _segment_clearance(a, b, m, (1, 4)) < guard:
            raise BranchCrossing(f"segment {a} -> {b} passes a zero of theta_1 or theta_4")
    tab0 = theta_table(0j, m)
    acc = cmath.log(tab0[1, 0] / tab0[2, 0])
    for a, b in zip(verts[:-1], verts[1:]):
        n = 16
        while True:
            pts = a + (b - a) * np.linspace(0.0, 1.0, n + 1)
            r = _ratio14(pts, m)
            steps = np.log(r[1:] / r[:-1])
            if np.max(np.abs(steps.imag)) < 0.5 or n >= 1 << 15:
                break
            n *= 2
        acc += steps.sum()
    # snap onto the exact principal value plus the accumulated winding
    principal = cmath.log(complex(_ratio14(np.array([u]), m)[0]))
    k = round((acc - principal).imag / (2 * PI))
    return BranchedLogValue(principal + 2j * PI * k, 0.5 + 0j, tuple(verts))


def _sprime_from_table(tab, th4sq0):
    """Factorized S' and the E1 - E4 route from the same theta table."""
    fact = PI * th4sq0 * tab[..., 1, 0] * tab[..., 2, 0] / (tab[..., 0, 0] * tab[..., 3, 0])
    e1 = tab[..., 0, 1] / tab[..., 0, 0]
    e4 = tab[..., 3, 1] / tab[..., 3, 0]
    return fact, e1 - e4, np.maximum(np.abs(e1), np.abs(e4))


def S_prime(u, m, guard: float = POLE_GUARD, check: bool = True):
    """S'(u) = pi theta_4(0)^2 theta_2 theta_3 / (theta_1 theta_4)."""
    m = as_modular(m)
    _guard(u, m, (1, 4), guard)
    tab = theta_table(u, m)
    fact, diff, scale = _sprime_from_table(tab, theta4_0_sq(m))
    if check:
        bad = np.abs(fact - diff) > CROSSCHECK_TOL * np.maximum(1.0, scale)
        if np.any(bad):
            raise ConsistencyError(f"S' factorization disagrees with E1 - E4 at u={u}")
    return _scalar(fact)


def S_tau(u, m, guard: float = POLE_GUARD):
    """Partial tau-derivative of S at fixed u, closed form.

    2 pi i dS/dtau = S'(u) E^(2)(u) + (pi^2/2) theta_4(0)^4, with S' E^(2)
    written as pi theta_4(0)^2 theta_2' theta_3 / (theta_1 theta_4) so that it
    stays finite at the zeros of theta_2.
    """
    m = as_modular(m)
    _guard(u, m, (1, 4), guard)
    tab = theta_table(u, m)
    t4 = theta4_0_sq(m)
    se2 = PI * t4 * tab[..., 1, 1] * tab[..., 2, 0] / (tab[..., 0, 0] * tab[..., 3, 0])
    return _scalar((se2 + 0.5 * PI ** 2 * t4 ** 2) / (2j * PI))


def g_function(u, m, guard: float = POLE_GUARD):
    """g(u) = 4 pi i dS/dtau - 2 S' E^(2) - pi^2 theta_4(0)^4 via the heat equation.

    Returns ``(g, scale)`` where scale is the largest term magnitude; g is
    identically zero.
    """
    m = as_modular(m)
    _guard(u, m, (1, 4), guard)
    tab = theta_table(u, m)
    t4 = theta4_0_sq(m)
    a = tab[..., 0, 2] / tab[..., 0, 0]
    b = tab[..., 3, 2] / tab[..., 3, 0]
    c = 2 * PI * t4 * tab[..., 2, 0] * tab[..., 1, 1] / (tab[..., 0, 0] * tab[..., 3, 0])
    d = PI ** 2 * t4 ** 2
    g = a - b - c - d
    scale = np.maximum.reduce([np.abs(a), np.abs(b), np.abs(c), np.full(np.shape(a), abs(d))])
    return _scalar(g), scale


def phi_pair(x1, x2, m, guard: float = POLE_GUARD, check: bool = True):
    """phi(x1, x2) = -E1(x1) - E4(x1) + E1(x2) + E4(x2) + 2 E2(x1 - x2)."""
    m = as_modular(m)
    x1 = complex(x1)
    x2 = complex(x2)
    _guard([x1, x2], m, (1, 4), guard, "x")
    _guard(x1 - x2, m, (2,), guard, "x1-x2")
    tab = theta_table(np.array([x1, x2, x1 - x2, x1 + x2, 0j]), m)
    e = tab[:3, :, 1] / tab[:3, :, 0]
    val = -e[0, 0] - e[0, 3] + e[1, 0] + e[1, 3] + 2 * e[2, 1]
    if check:
        fac = _phi_factorized(tab)
        scale = max(1.0, float(np.abs(e).max()))
        if abs(val - fac) > CROSSCHECK_TOL * scale:
            raise ConsistencyError(f"phi factorization mismatch at ({x1}, {x2}): {val} vs {fac}")
    return complex(val)


def _phi_factorized(tab):
    x1, x2, d, s, z = tab[:, :, 0]
    return (PI * z[1] * z[2] * z[3] ** 2 * d[0] * d[3] * s[1]
            / (x1[0] * x1[3] * x2[0] * x2[3] * d[1]))


def phi_pair_factorized(x1, x2, m, guard: float = POLE_GUARD):
    m = as_modular(m)
    x1 = complex(x1)
    x2 = complex(x2)
    _guard([x1, x2], m, (1, 4), guard, "x")
    _guard(x1 - x2, m, (2,), guard, "x1-x2")
    tab = theta_table(np.array([x1, x2, x1 - x2, x1 + x2, 0j]), m)
    return complex(_phi_factorized(tab))


def key_identity_residual(x1, x2, m, guard: float = POLE_GUARD) -> float:
    """Residual of S'(x1-x2) phi(x1,x2) + pi^2 theta_4(0)^4 = S'(x1) S'(x2)."""
    m = as_modular(m)
    x1 = complex(x1)
    x2 = complex(x2)
    _guard(x1 - x2, m, (1, 4), guard, "x1-x2")
    phi = phi_pair(x1, x2, m, guard)
    sp = S_prime(np.array([x1, x2, x1 - x2]), m, guard)
    lhs = sp[2] * phi + PI ** 2 * theta4_0_sq(m) ** 2
    return residual(lhs, sp[0] * sp[1])


def wp_prime(u, m, guard: float = POLE_GUARD):
    """Derivative of the Weierstrass function with periods 1, tau: -E^(1)''."""
    return _scalar(-np.asarray(eisenstein_du(1, u, m, 2, guard)))


def half_tau_collapse(u, m, guard: float = POLE_GUARD) -> float:
    """Residual of E1(u|tau) + E4(u|tau) = E1(u|tau/2)."""
    m = as_modular(m)
    _guard(u, m, (1, 4), guard)
    tab = theta_table(u, m)
    lhs = tab[..., 0, 1] / tab[..., 0, 0] + tab[..., 3, 1] / tab[..., 3, 0]
    th = theta_table(u, m.half())
    return residual(lhs, th[..., 0, 1] / th[..., 0, 0])


def half_period_identity_residual(x, m, guard: float = POLE_GUARD) -> float:
    """Residual of -E1'(x|tau/2) + E1'(1/2|tau/2) = pi^2 theta_4(0|tau)^4 theta_2^2/theta_1^2 (x|tau/2)."""
    m = as_modular(m)
    h = m.half()
    _guard(x, h, (1,), guard, "x")
    tab = theta_table(np.array([complex(x), 0.5]), h)
    _, e1, _ = _log_derivs(tab[:, 0, :])
    lhs = -e1[0] + e1[1]
    rhs = PI ** 2 * theta4_0_sq(m) ** 2 * (tab[0, 1, 0] / tab[0, 0, 0]) ** 2
    return residual(lhs, rhs)


def sprime1_residual(m) -> float:
    """Residual of theta_3''(0)/theta_3(0) - theta_2''(0)/theta_2(0) = pi^2 theta_4(0)^4."""
    tab = theta_table(0j, as_modular(m))
    lhs = tab[2, 2] / tab[2, 0] - tab[1, 2] / tab[1, 0]
    return residual(lhs, PI ** 2 * tab[3, 0] ** 4)
