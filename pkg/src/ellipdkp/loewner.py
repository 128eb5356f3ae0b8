"""Elliptic Löwner (Goluzin-Komatu) flow along a straight path in tau.

Three normalizations are supported:

``standard``
    4 pi i du/dtau = -E1(u+xi) - E4(u+xi) + E1(xi) + E4(xi); u = 0 is fixed.
``shifted``
    tracks u + c0 with dc0/dtau = -E1(xi|tau/2)/(4 pi i), so that
    4 pi i d(u+c0)/dtau = -E1(u + xi | tau/2).
``painleve``
    2 pi i du/dtau = -E1(u+xi|tau) (the shifted flow with tau -> 2 tau);
    log R and c0 are not evolved.

Along with the tracers the flow carries log R (4 pi i dlogR/dtau = S'(xi)^2),
c0, and optionally the coefficients c_1..c_N of u(z) = sum c_k z^-k.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .elliptic import POLE_GUARD, PI, S_prime, _guard, _log_derivs, eisenstein, residual, theta4_0_sq
from .errors import ConsistencyError, DegeneratePair, DomainError, NearPole, StepTooLarge
from .series import TruncatedSeries, compose_analytic, log_deriv_taylor
from .theta import ModularParam, as_modular, lattice_distance, theta_table

NORMALIZATIONS = ("standard", "shifted", "painleve")
SCHEMA_VERSION = 1
FOUR_PI_I = 4j * PI
TWO_PI_I = 2j * PI


@dataclass(frozen=True)
class TauPath:
    """tau(s) = start + s (end - start), s in [0, 1], with ``steps`` RK4 steps."""

    start: complex
    end: complex
    steps: int = 1000

    def __post_init__(self):
        object.__setattr__(self, "start", complex(self.start))
        object.__setattr__(self, "end", complex(self.end))
        if self.steps < 1:
            raise DomainError("steps must be positive")
        # Im tau is linear on the segment, so the endpoints bound it; the
        # standard/shifted flows also evaluate at tau/2.
        for t in (self.start, self.end):
            ModularParam(t)
            ModularParam(t / 2)

    @property
    def delta(self) -> complex:
        return self.end - self.start

    def tau(self, s):
        return self.start + np.asarray(s) * self.delta

    @property
    def real_axis(self) -> bool:
        return self.start.real == 0 and self.end.real == 0


@dataclass(frozen=True)
class DrivingFunction:
    """Driving function xi along the path.

    kinds: ``constant`` (``value``), ``closed_form`` (``func(tau)``) and
    ``table`` (samples ``xi_table`` at path parameters ``s_table``, linear
    interpolation).
    """

    kind: str
    value: complex = 0j
    func: Callable | None = None
    s_table: tuple = ()
    xi_table: tuple = ()

    def __post_init__(self):
        if self.kind not in ("constant", "closed_form", "table"):
            raise DomainError(f"unknown driving kind {self.kind!r}")
        if self.kind == "table":
            s = np.asarray(self.s_table, dtype=float)
            if s.size < 2 or s.size != len(self.xi_table):
                raise DomainError("table driver needs matching s and xi samples (at least two)")
            if np.any(np.diff(s) <= 0) or s[0] > 0 or s[-1] < 1:
                raise DomainError("table s samples must increase strictly and cover [0, 1]")
        if self.kind == "closed_form" and not callable(self.func):
            raise DomainError("closed_form driver needs a callable")

    @classmethod
    def constant(cls, value):
        return cls("constant", value=complex(value))

    @classmethod
    def closed_form(cls, func):
        return cls("closed_form", func=func)

    @classmethod
    def table(cls, s, xi):
        return cls("table", s_table=tuple(float(x) for x in s), xi_table=tuple(complex(x) for x in xi))

    def __call__(self, s, tau) -> complex:
        if self.kind == "constant":
            return self.value
        if self.kind == "closed_form":
            return complex(self.func(tau))
        xi = np.asarray(self.xi_table)
        st = np.asarray(self.s_table)
        return complex(np.interp(s, st, xi.real) + 1j * np.interp(s, st, xi.imag))

    @property
    def is_real(self) -> bool:
        if self.kind == "constant":
            return self.value.imag == 0
        if self.kind == "table":
            return all(x.imag == 0 for x in self.xi_table)
        return False

    def to_dict(self):
        if self.kind == "constant":
            return {"kind": "constant", "value": [self.value.real, self.value.imag]}
        if self.kind == "table":
            return {"kind": "table", "s": list(self.s_table), "xi": [[x.real, x.imag] for x in self.xi_table]}
        return {"kind": "closed_form", "func": getattr(self.func, "__name__", "callable")}


def seed_series(gamma0, N: int) -> TruncatedSeries:
    """Starting series u(z) = (gamma0/pi)/z + 0/z^2 + ... (c1 = gamma/pi)."""
    c = np.zeros(N + 1, dtype=np.complex128)
    c[1] = complex(gamma0) / PI
    return TruncatedSeries(c)


def loewner_rhs(u, xi, m, guard: float = POLE_GUARD, check: bool = True):
    """du/dtau of the standard flow; cross-checked against the tau/2 form."""
    m = as_modular(m)
    u = np.asarray(u, dtype=np.complex128)
    xi = complex(xi)
    pts = np.concatenate([[xi], (u + xi).reshape(-1)])
    _guard(pts, m, (1, 4), guard, "u+xi")
    tab = theta_table(pts, m)
    e14 = tab[:, 0, 1] / tab[:, 0, 0] + tab[:, 3, 1] / tab[:, 3, 0]
    out = (-e14[1:] + e14[0]) / FOUR_PI_I
    if check:
        th = theta_table(pts, m.half())
        e_half = th[:, 0, 1] / th[:, 0, 0]
        alt = (-e_half[1:] + e_half[0]) / FOUR_PI_I
        scale = np.maximum(1.0, np.abs(e14[1:]) + abs(e14[0]))
        if np.any(np.abs(out - alt) > 1e-11 * scale):
            raise ConsistencyError("full-period and half-period forms of the flow disagree")
    out = out.reshape(u.shape)
    return complex(out) if out.ndim == 0 else out


class LoewnerFlow:
    """Right-hand side and RK4 stepping for the packed state.

    State layout: [u_1..u_J, log R, c0, c_1..c_N] (N may be 0).
    """

    def __init__(self, path: TauPath, drv: DrivingFunction, n_tracers: int, N: int = 0,
                 normalization: str = "standard", guard: float = POLE_GUARD):
        if normalization not in NORMALIZATIONS:
            raise DomainError(f"normalization must be one of {NORMALIZATIONS}")
        self.path = path
        self.drv = drv
        self.J = int(n_tracers)
        self.N = int(N)
        self.normalization = normalization
        self.guard = guard

    def xi(self, s):
        return self.drv(s, self.path.tau(s))

    def rhs_tau(self, s, y):
        """d(state)/dtau at path parameter s."""
        tau = complex(self.path.tau(s))
        m = ModularParam(tau)
        xi = self.xi(s)
        J = self.J
        u = y[:J]
        dy = np.zeros_like(y)
        if self.normalization == "painleve":
            pts = np.concatenate([[xi], u + xi])
            _guard(pts[1:], m, (1,), self.guard, "u+xi")
            tab = theta_table(pts, m)
            e1 = tab[:, 0, 1] / tab[:, 0, 0]
            dy[:J] = -e1[1:] / TWO_PI_I
            dy[J] = np.nan
            dy[J + 1] = np.nan
            if self.N:
                # this flow moves u(infinity), so expand around xi + c0
                taylor = -log_deriv_taylor(((1, 1.0),), xi + y[J + 1], m, self.N, self.guard) / TWO_PI_I
                dy[J + 1] = taylor[0]
                dy[J + 2:] = self._series_rate(taylor, y)
            return dy
        c0 = y[J + 1]
        shift = c0 if self.normalization == "shifted" else 0.0
        pts = np.concatenate([[xi, 0j], u - shift + xi])
        _guard(pts[[0] + list(range(2, J + 2))], m, (1, 4), self.guard, "u+xi")
        tab = theta_table(pts, m)
        live = np.r_[0, 2:J + 2]
        e14 = np.zeros(J + 2, dtype=np.complex128)
        e14[live] = tab[live, 0, 1] / tab[live, 0, 0] + tab[live, 3, 1] / tab[live, 3, 0]
        if self.normalization == "standard":
            dy[:J] = (-e14[2:] + e14[0]) / FOUR_PI_I
        else:
            dy[:J] = -e14[2:] / FOUR_PI_I
        t40sq = tab[1, 3, 0] ** 2
        sp_xi = PI * t40sq * tab[0, 1, 0] * tab[0, 2, 0] / (tab[0, 0, 0] * tab[0, 3, 0])
        dy[J] = sp_xi ** 2 / FOUR_PI_I
        dy[J + 1] = -e14[0] / FOUR_PI_I
        if self.N:
            taylor = -log_deriv_taylor(((1, 1.0), (4, 1.0)), xi, m, self.N, self.guard) / FOUR_PI_I
            dy[J + 2:] = self._series_rate(taylor, y)
        return dy

    def _series_rate(self, taylor, y):
        s = TruncatedSeries(np.concatenate([[0j], y[self.J + 2:]]))
        return compose_analytic(taylor, s).coeffs[1:]

    def rhs(self, s, y):
        return self.rhs_tau(s, y) * self.path.delta

    def step(self, s, y, ds):
        """One classical RK4 step; pole hits in stages 2-4 raise StepTooLarge."""
        try:
            k1 = self.rhs(s, y)
        except NearPole as exc:
            raise NearPole(f"trajectory hit a pole at s={s:.6g}: {exc}", location=exc.location, s=s) from exc
        try:
            k2 = self.rhs(s + ds / 2, y + ds / 2 * k1)
            k3 = self.rhs(s + ds / 2, y + ds / 2 * k2)
            k4 = self.rhs(s + ds, y + ds * k3)
        except NearPole as exc:
            raise StepTooLarge(f"RK4 stage near a pole in step starting at s={s:.6g}: {exc}", s=s) from exc
        inc = ds / 6 * (k1 + 2 * k2 + 2 * k3 + k4)
        return y + inc, inc


@dataclass(frozen=True, eq=False)
class Trajectory:
    s: np.ndarray
    tau: np.ndarray
    xi: np.ndarray
    u: np.ndarray            # (M, J)
    log_R: np.ndarray        # (M,), NaN when not evolved
    c0: np.ndarray           # (M,), NaN when not evolved
    series: np.ndarray | None  # (M, N+1) or None
    u_increments: np.ndarray  # (M-1, J) RK4 increments, u[i+1] - u[i] before rounding
    normalization: str
    tracers0: tuple
    constant_driver: bool
    flow: LoewnerFlow | None = field(default=None, repr=False)

    @property
    def dtau(self) -> complex:
        """tau step (uniform grid)."""
        return complex(self.tau[1] - self.tau[0])

    def series_at(self, i) -> TruncatedSeries:
        return TruncatedSeries(self.series[i])

    def to_csv(self, path):
        J = self.u.shape[1]
        cols = ["s", "re_tau", "im_tau"]
        for j in range(J):
            cols += [f"re_u{j}", f"im_u{j}"]
        cols += ["re_logR", "im_logR"]
        data = [self.s, self.tau.real, self.tau.imag]
        for j in range(J):
            data += [self.u[:, j].real, self.u[:, j].imag]
        data += [self.log_R.real, self.log_R.imag]
        if self.normalization == "shifted":
            cols += ["re_c0", "im_c0"]
            data += [self.c0.real, self.c0.imag]
        arr = np.column_stack(data)
        np.savetxt(path, arr, delimiter=",", header=",".join(cols), comments="", fmt="%.16e")

    def to_dict(self):
        def cplx(a):
            a = np.asarray(a)
            return np.stack([a.real, a.imag], axis=-1).tolist()

        return {
            "schema_version": SCHEMA_VERSION,
            "normalization": self.normalization,
            "tracers0": cplx(np.asarray(self.tracers0, dtype=complex)),
            "s": self.s.tolist(),
            "tau": cplx(self.tau),
            "xi": cplx(self.xi),
            "u": cplx(self.u),
            "log_R": cplx(np.nan_to_num(self.log_R)) if self.normalization != "painleve" else None,
            "c0": cplx(self.c0) if not np.all(np.isnan(self.c0)) else None,
            "series": cplx(self.series) if self.series is not None else None,
        }

    def to_json(self, path):
        with open(path, "w") as fh:
            json.dump(self.to_dict(), fh)


def evolve(path: TauPath, drv: DrivingFunction, tracers, series0: TruncatedSeries | None = None,
           gamma0=1.0, normalization: str = "standard", guard: float = POLE_GUARD,
           check_real: bool = True) -> Trajectory:
    """Integrate tracers (and optionally the series u(z)) along ``path`` with RK4.

    With the Painlevé normalization u(infinity) is not fixed: c0 is evolved
    along with the series and drifts toward the pole at -xi, so the series
    coefficients grow quickly on long paths.

    log R starts at log(gamma0 theta_2(0) theta_3(0)) at the path start. In the
    real regime (imaginary path, real driver, real gamma0 > 0) log R is checked
    to stay real and non-decreasing.
    """
    tracers = np.atleast_1d(np.asarray(tracers, dtype=np.complex128))
    J = tracers.size
    N = series0.N if series0 is not None else 0
    if series0 is not None and normalization == "standard" and series0.c0 != 0:
        raise DomainError("series0 must have c0 = 0 (u(infinity) = 0)")
    flow = LoewnerFlow(path, drv, J, N, normalization, guard)
    M = path.steps + 1
    ds = 1.0 / path.steps
    y = np.zeros(J + 2 + N, dtype=np.complex128)
    y[:J] = tracers
    m0 = ModularParam(path.start)
    if normalization == "painleve":
        y[J] = np.nan
        y[J + 1] = series0.c0 if N else np.nan
    else:
        tab = theta_table(0j, m0)
        y[J] = np.log(complex(gamma0) * tab[1, 0] * tab[2, 0])
        y[J + 1] = series0.c0 if (series0 is not None and normalization == "shifted") else 0.0
    if N:
        y[J + 2:] = series0.coeffs[1:]
    states = np.empty((M, y.size), dtype=np.complex128)
    incs = np.empty((M - 1, J), dtype=np.complex128)
    states[0] = y
    s_grid = np.linspace(0.0, 1.0, M)
    for i in range(M - 1):
        y, inc = flow.step(s_grid[i], y, ds)
        states[i + 1] = y
        incs[i] = inc[:J]
    tau = path.tau(s_grid)
    xi = np.array([flow.xi(s) for s in s_grid])
    traj = Trajectory(
        s=s_grid,
        tau=tau,
        xi=xi,
        u=states[:, :J],
        log_R=states[:, J],
        c0=states[:, J + 1],
        series=(np.column_stack([states[:, J + 1] if normalization != "standard" else np.zeros(M), states[:, J + 2:]])
                if N else None),
        u_increments=incs,
        normalization=normalization,
        tracers0=tuple(complex(t) for t in tracers),
        constant_driver=drv.kind == "constant",
        flow=flow,
    )
    if (check_real and normalization != "painleve" and path.real_axis and drv.is_real
            and complex(gamma0).imag == 0 and complex(gamma0).real > 0):
        lr = traj.log_R
        if np.max(np.abs(lr.imag - lr.imag[0])) > 1e-9 or np.any(np.diff(lr.real) < -1e-12):
            raise ConsistencyError("log R must stay real and non-decreasing in the real regime")
    return traj


# ----------------------------------------------------------- along-trajectory checks

def _unwrapped_S(u, tau):
    """S(u_i | tau_i) along a sampled curve, with the branch continued in i."""
    out = np.empty(len(u), dtype=np.complex128)
    for i, (ui, ti) in enumerate(zip(u, tau)):
        tab = theta_table(ui, ModularParam(ti))
        out[i] = np.log(tab[0, 0] / tab[3, 0])
    return out.real + 1j * np.unwrap(out.imag)


def _central(f, tau):
    return (f[2:] - f[:-2]) / (tau[2:] - tau[:-2])


def _is_zero_tracer(traj, j):
    return traj.tracers0[j] == 0


def _sprime_at(points, taus):
    return np.array([S_prime(p, t) for p, t in zip(points, taus)])


def _require(traj, normalization):
    if traj.normalization != normalization:
        raise DomainError(f"needs a {normalization!r} trajectory, got {traj.normalization!r}")


def total_dS_dtau(traj: Trajectory, j: int):
    """Finite-difference total derivative dS(u_j)/dtau at interior samples.

    For a tracer started at u = 0 (the point z = infinity) this is the limit
    d log R/dtau.
    """
    if _is_zero_tracer(traj, j):
        return _central(traj.log_R, traj.tau)
    return _central(_unwrapped_S(traj.u[:, j], traj.tau), traj.tau)


def total_derivative_residual(traj: Trajectory, j: int):
    """4 pi i dS(u_j)/dtau against S'(xi) S'(u_j + xi), per interior sample."""
    _require(traj, "standard")
    lhs = FOUR_PI_I * total_dS_dtau(traj, j)
    tau = traj.tau[1:-1]
    xi = traj.xi[1:-1]
    sx = _sprime_at(xi, tau)
    if _is_zero_tracer(traj, j):
        rhs = sx * sx
    else:
        rhs = sx * _sprime_at(traj.u[1:-1, j] + xi, tau)
    return residual(lhs, rhs)


def consistency_residual(traj: Trajectory, j1: int, j2: int, guard: float = POLE_GUARD):
    """(dS(u1)/dtau)(dS(u2)/dtau) against (dlogR/dtau)(dS(u1-u2)/dtau)."""
    _require(traj, "standard")
    if j1 == j2:
        raise DegeneratePair("consistency needs two distinct tracers")
    diff = traj.u[:, j1] - traj.u[:, j2]
    for d, t in zip(diff, traj.tau):
        if lattice_distance(d, t) < guard:
            raise DegeneratePair("tracers coincide (mod lattice) along the trajectory")
    a = total_dS_dtau(traj, j1)
    b = total_dS_dtau(traj, j2)
    r = _central(traj.log_R, traj.tau)
    c = _central(_unwrapped_S(diff, traj.tau), traj.tau)
    return residual(a * b, r * c)


def substituted_identity_residual(u1, u2, xi, m, guard: float = POLE_GUARD) -> float:
    """The consistency relation with the flow and log R rate substituted in.

    Left: prod_j S'(u_j) [4 pi i du_j/dtau + 2 E2(u_j) + pi^2 theta_4(0)^4 / S'(u_j)]
    Right: 4 pi i (dlogR/dtau) S'(u1-u2) [4 pi i (du1 - du2)/dtau + 2 E2(u1-u2)
           + pi^2 theta_4(0)^4 / S'(u1-u2)], with 4 pi i dlogR/dtau = S'(xi)^2.
    No differencing is involved.
    """
    m = as_modular(m)
    u1, u2, xi = complex(u1), complex(u2), complex(xi)
    rates = FOUR_PI_I * loewner_rhs(np.array([u1, u2]), xi, m, guard, check=False)
    pts = np.array([u1, u2, u1 - u2])
    _guard(pts, m, (1, 2, 4), guard)
    sp = S_prime(pts, m, guard)
    e2 = np.array([eisenstein(2, p, m, guard) for p in pts])
    k = PI ** 2 * theta4_0_sq(m) ** 2
    lhs = (sp[0] * (rates[0] + 2 * e2[0]) + k) * (sp[1] * (rates[1] + 2 * e2[1]) + k)
    rhs = S_prime(xi, m, guard) ** 2 * (sp[2] * (rates[0] - rates[1] + 2 * e2[2]) + k)
    return residual(lhs, rhs)


def trajectory_substituted_residual(traj: Trajectory, guard: float = POLE_GUARD):
    """substituted_identity_residual at every sample for every pair of non-zero tracers."""
    _require(traj, "standard")
    idx = [j for j in range(traj.u.shape[1]) if not _is_zero_tracer(traj, j)]
    out = []
    for i in range(len(traj.s)):
        m = ModularParam(traj.tau[i])
        for a in range(len(idx)):
            for b in range(a + 1, len(idx)):
                out.append(substituted_identity_residual(traj.u[i, idx[a]], traj.u[i, idx[b]], traj.xi[i], m, guard))
    return np.array(out)


def _painleve_checks(traj):
    _require(traj, "painleve")
    if not traj.constant_driver:
        raise DomainError("Painlevé and heat checks need a constant driving function")


def painleve_residual(traj: Trajectory, j: int, guard: float = POLE_GUARD):
    """(2 pi i)^2 d^2u/dtau^2 against wp'(u + xi)/2 at interior samples.

    The second difference is formed from the stored RK4 increments,
    (inc_i - inc_{i-1}) / dtau^2, which avoids cancellation between the
    rounded state values.
    """
    _painleve_checks(traj)
    inc = traj.u_increments[:, j]
    d2 = (inc[1:] - inc[:-1]) / traj.dtau ** 2
    lhs = TWO_PI_I ** 2 * d2
    pts = traj.u[1:-1, j] + traj.xi[1:-1]
    rhs = np.array([_wp_prime_checked(p, t, guard) for p, t in zip(pts, traj.tau[1:-1])])
    return residual(lhs, 0.5 * rhs)


def _wp_prime_checked(p, tau, guard):
    m = ModularParam(tau)
    _guard(p, m, (1,), guard, "u+xi")
    tab = theta_table(p, m)
    return -_log_derivs(tab[0])[2]


def heat_residual(traj: Trajectory, j: int, guard: float = POLE_GUARD):
    """4 pi i d/dtau E1(u_j + xi | tau) along the trajectory against E1''(u_j + xi)."""
    _painleve_checks(traj)
    pts = traj.u[:, j] + traj.xi
    f = np.empty(len(pts), dtype=np.complex128)
    e2 = np.empty(len(pts), dtype=np.complex128)
    for i, (p, t) in enumerate(zip(pts, traj.tau)):
        m = ModularParam(t)
        _guard(p, m, (1,), guard, "u+xi")
        e, _, ee = _log_derivs(theta_table(p, m)[0])
        f[i] = e
        e2[i] = ee
    lhs = FOUR_PI_I * _central(f, traj.tau)
    return residual(lhs, e2[1:-1])


def eisenstein_tau_law_residual(u, m, h: float = 1e-4, guard: float = POLE_GUARD) -> float:
    """4 pi i dE1/dtau (central difference, fixed u) against 2 E1 E1' + E1''."""
    m = as_modular(m)
    u = complex(u)
    _guard(u, m, (1,), guard)
    tau = m.tau
    ep = complex(theta_table(u, ModularParam(tau + h))[0, 1] / theta_table(u, ModularParam(tau + h))[0, 0])
    em = complex(theta_table(u, ModularParam(tau - h))[0, 1] / theta_table(u, ModularParam(tau - h))[0, 0])
    lhs = FOUR_PI_I * (ep - em) / (2 * h)
    e, e1, e2 = _log_derivs(theta_table(u, m)[0])
    return residual(lhs, 2 * e * e1 + e2)


def _path_quadrature(path: TauPath, drv: DrivingFunction, rate, nodes: int):
    x, w = np.polynomial.legendre.leggauss(nodes)
    s = 0.5 * (x + 1)
    vals = np.array([rate(drv(si, complex(path.tau(si))), ModularParam(complex(path.tau(si)))) for si in s])
    return complex(0.5 * np.dot(w, vals) * path.delta)


def log_R_quadrature(path: TauPath, drv: DrivingFunction, gamma0=1.0, nodes: int = 64) -> complex:
    """log R at the path end by Gauss-Legendre quadrature of S'(xi)^2/(4 pi i).

    Exact up to quadrature error for smooth drivers; table drivers are only
    piecewise linear, so use more nodes or compare loosely.
    """
    tab = theta_table(0j, ModularParam(path.start))
    start = np.log(complex(gamma0) * tab[1, 0] * tab[2, 0])
    return start + _path_quadrature(path, drv, log_R_rate, nodes)


def c0_quadrature(path: TauPath, drv: DrivingFunction, c0_start=0.0, nodes: int = 64) -> complex:
    """c0 at the path end by Gauss-Legendre quadrature of -E1(xi|tau/2)/(4 pi i)."""
    return complex(c0_start) + _path_quadrature(path, drv, c0_rate, nodes)


def log_R_rate(xi, m):
    """d log R / dtau = S'(xi)^2 / (4 pi i)."""
    return S_prime(xi, m) ** 2 / FOUR_PI_I


def c0_rate(xi, m):
    """d c0 / dtau = -E1(xi | tau/2) / (4 pi i)."""
    return -eisenstein(1, xi, as_modular(m).half()) / FOUR_PI_I


__all__ = [
    "TauPath", "DrivingFunction", "Trajectory", "LoewnerFlow", "evolve", "loewner_rhs", "seed_series",
    "total_derivative_residual", "consistency_residual", "substituted_identity_residual",
    "trajectory_substituted_residual", "painleve_residual", "heat_residual", "eisenstein_tau_law_residual",
    "log_R_rate", "c0_rate", "log_R_quadrature", "c0_quadrature",
]
