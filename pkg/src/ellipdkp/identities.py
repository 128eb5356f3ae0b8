"""Registry of identity checks over seeded random samples.

Each check maps a batch of samples (u, u2, tau) to per-sample residuals.
``exact`` checks compare closed forms; ``fd`` checks compare against
central differences in tau and are reported together with the ratio of
residuals at steps h and h/2.
"""
from __future__ import annotations

import cmath
from dataclasses import asdict, dataclass

import numpy as np

from .curve import CurveParams, p_of_u
from .elliptic import (
    PI, S_prime, S_tau, _log_derivs, g_function, half_period_identity_residual, half_tau_collapse,
    key_identity_residual, phi_pair, phi_pair_factorized, residual, sprime1_residual, theta4_0_sq,
)
from .theta import ModularParam, lattice_distance, theta1_product, theta_table

_SHIFT1 = np.array([-1.0, -1.0, 1.0, 1.0])
_SHIFTTAU = np.array([-1.0, 1.0, 1.0, -1.0])
_PARITY = np.array([-1.0, 1.0, 1.0, 1.0])


@dataclass(frozen=True)
class Samples:
    u: np.ndarray
    u2: np.ndarray
    tau: np.ndarray

    def __len__(self):
        return len(self.tau)


def draw_samples(rng: np.random.Generator, n: int, im_tau=(0.6, 2.0), re_tau=(-0.5, 0.5),
                 clearance: float = 0.05, max_nome: float | None = None) -> Samples:
    """Random tau in the box and u, u2 = a + b tau with a, b in (-1/2, 1/2).

    Points within ``clearance`` of any half-period lattice are redrawn, and so
    are pairs whose sum or difference comes that close.
    """
    if n < 1:
        raise ValueError("sample count must be positive")
    lo, hi = im_tau
    if not 0 < lo <= hi:
        raise ValueError(f"Im tau range must be positive, got {im_tau}")
    if max_nome is not None:
        for y in (lo, lo / 2):
            nome = np.exp(-PI * y)
            if nome > max_nome:
                raise ValueError(f"Im tau = {y:g} gives |q| = {nome:.3f} above the configured limit {max_nome}")
    us, u2s, taus = [], [], []
    while len(taus) < n:
        tau = complex(rng.uniform(*re_tau), rng.uniform(lo, hi))
        m = ModularParam(tau)
        a = rng.uniform(-0.5, 0.5, size=4)
        u = a[0] + a[1] * tau
        u2 = a[2] + a[3] * tau
        pts = np.array([u, u2, u - u2, u + u2])
        if min(float(np.min(lattice_distance(pts, m, w))) for w in m.half_periods()) < clearance:
            continue
        us.append(u)
        u2s.append(u2)
        taus.append(tau)
    return Samples(np.array(us), np.array(u2s), np.array(taus))


@dataclass(frozen=True)
class CheckResult:
    name: str
    anchor: str
    samples: int
    max_residual: float
    tolerance: float
    passed: bool
    extra: dict | None = None

    def to_dict(self):
        d = asdict(self)
        if d["extra"] is None:
            d.pop("extra")
        return d


def _rel(lhs, rhs):
    return float(np.max(residual(lhs, rhs)))


# ----------------------------------------------------------------- exact checks

def _parity(u, u2, tau):
    m = ModularParam(tau)
    t = theta_table(np.array([u, -u]), m)
    return _rel(t[1, :, 0], _PARITY * t[0, :, 0])


def _quasi_periodicity(u, u2, tau):
    m = ModularParam(tau)
    t = theta_table(np.array([u, u + 1, u + tau]), m, reduce=False)[:, :, 0]
    fac = cmath.exp(-1j * PI * tau - 2j * PI * u)
    return max(_rel(t[1], _SHIFT1 * t[0]), _rel(t[2], _SHIFTTAU * fac * t[0]))


def _half_shifts(u, u2, tau):
    m = ModularParam(tau)
    t = theta_table(np.array([u, u + 0.5, u + (1 + tau) / 2, u + tau / 2]), m)[:, :, 0]
    e = cmath.exp(-1j * PI * tau / 4 - 1j * PI * u)
    pairs = [
        (t[1, 0], t[0, 1]), (t[1, 2], t[0, 3]),
        (t[2, 0], e * t[0, 2]), (t[2, 1], -1j * e * t[0, 3]),
        (t[3, 0], 1j * e * t[0, 3]), (t[3, 1], e * t[0, 2]),
    ]
    return max(_rel(a, b) for a, b in pairs)


def _theta1_prime(u, u2, tau):
    t = theta_table(0j, ModularParam(tau))
    return _rel(t[0, 1], PI * t[1, 0] * t[2, 0] * t[3, 0])


def _theta_const_derivs(u, u2, tau):
    t = theta_table(0j, ModularParam(tau))
    return float(max(abs(t[1, 1]), abs(t[2, 1]), abs(t[0, 0])))


def _theta4_sq_half(u, u2, tau):
    m = ModularParam(tau)
    th = theta_table(0j, m.half())
    return _rel(theta4_0_sq(m), th[2, 0] * th[3, 0])


def _zeros(u, u2, tau):
    m = ModularParam(tau)
    t = theta_table(np.array(m.half_periods()), m)
    return float(max(abs(t[a, a, 0]) for a in range(4)))


def _duplication(u, u2, tau):
    m = ModularParam(tau)
    t = theta_table(u, m)[:, 0]
    h = theta_table(np.array([0j, u]), m.half())[:, :, 0]
    return max(_rel(2 * t[0] * t[3], h[0, 1] * h[1, 0]), _rel(2 * t[1] * t[2], h[0, 1] * h[1, 1]))


def _product(u, u2, tau):
    m = ModularParam(tau)
    return _rel(theta1_product(u, m), theta_table(u, m)[0, 0])


def _e_periods(u, u2, tau):
    m = ModularParam(tau)
    t = theta_table(np.array([u, u + 1, u + tau]), m)
    e = t[:, :, 1] / t[:, :, 0]
    return max(_rel(e[1], e[0]), _rel(e[2], e[0] - 2j * PI))


def _e_half_shift(u, u2, tau):
    m = ModularParam(tau)
    t = theta_table(np.array([u, u + tau / 2]), m)
    e = t[:, :, 1] / t[:, :, 0]
    return max(_rel(e[1, 0], e[0, 3] - 1j * PI), _rel(e[1, 3], e[0, 0] - 1j * PI))


def _e_special(u, u2, tau):
    m = ModularParam(tau)
    t = theta_table(np.array([0j, tau / 2]), m)
    return max(float(abs(t[0, 1, 1] / t[0, 1, 0])), _rel(t[1, 1, 1] / t[1, 1, 0], -1j * PI))


def _sprime(u, u2, tau):
    m = ModularParam(tau)
    t = theta_table(u, m)
    return _rel(S_prime(u, m, check=False), t[0, 1] / t[0, 0] - t[3, 1] / t[3, 0])


def _sprime1(u, u2, tau):
    return sprime1_residual(ModularParam(tau))


def _key1(u, u2, tau):
    return key_identity_residual(u, u2, ModularParam(tau))


def _key2(u, u2, tau):
    m = ModularParam(tau)
    return _rel(phi_pair(u, u2, m, check=False), phi_pair_factorized(u, u2, m))


def _g_zero(u, u2, tau):
    g, scale = g_function(u, ModularParam(tau))
    return float(abs(g) / max(1.0, scale))


def _collapse(u, u2, tau):
    return half_tau_collapse(u, ModularParam(tau))


def _final_half_period(u, u2, tau):
    return half_period_identity_residual(u, ModularParam(tau))


def _s_tau_shift(u, u2, tau):
    m = ModularParam(tau)
    return _rel(S_tau(u + tau, m) - S_tau(u, m), -S_prime(u, m))


def _p_link(u, u2, tau):
    cp = CurveParams(0.7, ModularParam(tau))
    return _rel(cp.c1 * S_prime(u, cp.m), p_of_u(u, cp))


# ----------------------------------------------------------------- finite-difference checks

def _tau_fd(f, tau, h):
    return (f(tau + h) - f(tau - h)) / (2 * h)


def _heat(u, u2, tau, h):
    lhs = 4j * PI * _tau_fd(lambda t: theta_table(u, ModularParam(t))[:, 0], tau, h)
    rhs = theta_table(u, ModularParam(tau))[:, 2]
    return _rel(lhs, rhs)


def _e1_tau(u, u2, tau, h):
    def e1(t):
        tab = theta_table(u, ModularParam(t))
        return tab[0, 1] / tab[0, 0]

    lhs = 4j * PI * _tau_fd(e1, tau, h)
    e, e1p, e2p = _log_derivs(theta_table(u, ModularParam(tau))[0])
    return _rel(lhs, 2 * e * e1p + e2p)


def _s_tau_fd(u, u2, tau, h):
    def ratio(t):
        tab = theta_table(u, ModularParam(t))
        return tab[0, 0] / tab[3, 0]

    # log of the quotient avoids any branch choice for S
    lhs = cmath.log(ratio(tau + h) / ratio(tau - h)) / (2 * h)
    return _rel(lhs, S_tau(u, ModularParam(tau)))


EXACT_CHECKS = {
    "theta_parity": ("theta_1 odd, theta_2,3,4 even", _parity),
    "theta_quasi_periodicity": ("theta_a(u+1), theta_a(u+tau) = sign * exp(-i pi tau - 2 i pi u) * theta_a(u)", _quasi_periodicity),
    "theta_half_period_shifts": ("shifts of theta_a by 1/2, (1+tau)/2, tau/2", _half_shifts),
    "theta1_prime_zero": ("theta_1'(0) = pi theta_2(0) theta_3(0) theta_4(0)", _theta1_prime),
    "theta_const_derivatives": ("theta_1(0) = theta_2'(0) = theta_3'(0) = 0", _theta_const_derivs),
    "theta4_square_half_tau": ("theta_4(0|tau)^2 = theta_3(0|tau/2) theta_4(0|tau/2)", _theta4_sq_half),
    "theta_zeros": ("theta_a(omega_{a-1}) = 0", _zeros),
    "theta_duplication": ("2 theta_1 theta_4 (u|tau) = theta_2(0|tau/2) theta_1(u|tau/2); same for theta_2 theta_3", _duplication),
    "theta1_product_oracle": ("theta_1 series = infinite product", _product),
    "eisenstein_periods": ("E(u+1) = E(u), E(u+tau) = E(u) - 2 pi i", _e_periods),
    "eisenstein_half_tau_shift": ("E1(u+tau/2) = E4(u) - pi i, E4(u+tau/2) = E1(u) - pi i", _e_half_shift),
    "eisenstein_special_values": ("E2(0) = 0, E2(tau/2) = -pi i", _e_special),
    "sprime_factorization": ("S' = E1 - E4 = pi theta_4(0)^2 theta_2 theta_3 / (theta_1 theta_4)", _sprime),
    "sprime_theta_constants": ("theta_3''/theta_3 - theta_2''/theta_2 at 0 = pi^2 theta_4(0)^4", _sprime1),
    "key_identity": ("S'(x1-x2) phi(x1,x2) + pi^2 theta_4(0)^4 = S'(x1) S'(x2)", _key1),
    "phi_factorization": ("phi(x1,x2) as a theta quotient", _key2),
    "g_vanishes": ("4 pi i dS/dtau - 2 S' E2 - pi^2 theta_4(0)^4 = 0", _g_zero),
    "half_tau_collapse": ("E1(u|tau) + E4(u|tau) = E1(u|tau/2)", _collapse),
    "half_period_identity": ("-E1'(x|tau/2) + E1'(1/2|tau/2) = pi^2 theta_4(0)^4 theta_2^2/theta_1^2 (x|tau/2)", _final_half_period),
    "s_tau_lattice_shift": ("dS/dtau(u+tau) = dS/dtau(u) - S'(u)", _s_tau_shift),
    "c1_sprime_equals_p": ("c1 S'(u) = p(u) with c1 = gamma/pi", _p_link),
}

FD_CHECKS = {
    "theta_heat_equation": ("4 pi i d theta_a/dtau = theta_a''", _heat),
    "eisenstein_tau_law": ("4 pi i dE1/dtau = 2 E1 E1' + E1''", _e1_tau),
    "s_tau_closed_form": ("2 pi i dS/dtau = S' E2 + (pi^2/2) theta_4(0)^4", _s_tau_fd),
}

FD_RATIO_RANGE = (3.5, 4.5)


def run_exact(samples: Samples, tol: float = 1e-10, names=None):
    out = []
    for name in sorted(EXACT_CHECKS if names is None else names):
        anchor, fn = EXACT_CHECKS[name]
        r = np.array([fn(u, v, t) for u, v, t in zip(samples.u, samples.u2, samples.tau)])
        worst = float(np.max(r))
        out.append(CheckResult(name, anchor, len(samples), worst, tol, bool(worst < tol)))
    return out


def run_fd(samples: Samples, tol: float = 1e-5, h: float = 1e-4, ratio_range=FD_RATIO_RANGE, names=None):
    """FD checks at step h; also reports max-residual(h)/max-residual(h/2)."""
    out = []
    for name in sorted(FD_CHECKS if names is None else names):
        anchor, fn = FD_CHECKS[name]
        r1 = np.array([fn(u, v, t, h) for u, v, t in zip(samples.u, samples.u2, samples.tau)])
        r2 = np.array([fn(u, v, t, h / 2) for u, v, t in zip(samples.u, samples.u2, samples.tau)])
        worst = float(np.max(r1))
        ratio = float(worst / np.max(r2)) if np.max(r2) > 0 else float("inf")
        ok = worst < tol and ratio_range[0] <= ratio <= ratio_range[1]
        out.append(CheckResult(name, anchor, len(samples), worst, tol, bool(ok),
                               extra={"step": h, "halved_step_residual": float(np.max(r2)), "ratio": ratio,
                                      "ratio_range": list(ratio_range)}))
    return out
