"""Command-line front end: ``ellipdkp <command> --config FILE``.

Commands: identities, curve, evolve, painleve, hodograph. Each writes
``<command>_report.json`` (and data files) to the output directory, which
defaults to $ELLIPDKP_OUT_DIR or the working directory.

Exit codes: 0 all checks pass, 1 a check failed, 2 usage or config error.
"""
from __future__ import annotations

import argparse
import copy
import datetime as _dt
import json
import math
import os
import platform
import sys
from pathlib import Path

import numpy as np

from . import __version__
from ._kernels import BACKEND
from .curve import CurveParams, curve_residual, p_of_u, ratio_identity_residual, tau_from_modulus, modulus_ratio, u_from_w, w_of_u
from .errors import EllipticDKPError, NearPole, NoSignChange, StepTooLarge
from .hodograph import (
    HodographProblem, SpeedTable, TimeVector, generating_residual, hodograph_solve, homogeneity_residual,
    hydrodynamic_residual, objective, phi_linear, phi_zero, t0_independence, time_gradient,
)
from .identities import CheckResult, draw_samples, run_exact, run_fd
from .loewner import (
    DrivingFunction, TauPath, c0_quadrature, consistency_residual, eisenstein_tau_law_residual, evolve,
    heat_residual, log_R_quadrature, painleve_residual, seed_series, total_derivative_residual,
    trajectory_substituted_residual,
)
from .theta import ModularParam, lattice_distance

SCHEMA_VERSION = 1
OUT_ENV = "ELLIPDKP_OUT_DIR"
COMMANDS = ("identities", "curve", "evolve", "painleve", "hodograph")


class ConfigError(Exception):
    pass


DEFAULTS = {
    "identities": {
        "seed": 42,
        "samples": 100,
        "im_tau": [0.6, 2.0],
        "re_tau": [-0.5, 0.5],
        "clearance": 0.05,
        "max_nome": 0.8,
        "tol_exact": 1e-10,
        "tol_fd": 1e-5,
        "fd_step": 1e-4,
    },
    "curve": {
        "seed": 42,
        "gamma": [1.0, 0.0],
        "tau": [0.0, 1.2],
        "samples": 200,
        "clearance": 0.05,
        "tol": 1e-10,
        "csv": "curve_samples.csv",
    },
    "evolve": {
        "seed": 42,
        "tau_start": [0.0, 1.0],
        "tau_end": [0.0, 1.5],
        "steps": 1000,
        "driving": {"kind": "constant", "value": [0.5, 0.0]},
        "tracers": [[0.0, 0.0], [0.0, 0.2], [0.1, 0.15]],
        "gamma0": 1.0,
        "normalization": "standard",
        "series_order": 0,
        "quadrature_nodes": 64,
        "tol": {
            "zero_tracer": 1e-12,
            "total_derivative": 1e-6,
            "consistency": 1e-5,
            "quadrature": 1e-8,
            "substituted_identity": 1e-10,
            "step_halving": 1e-9,
        },
        "csv": "trajectory.csv",
        "json": "trajectory.json",
    },
    "painleve": {
        "seed": 42,
        "tau_start": [0.0, 1.0],
        "tau_end": [0.0, 1.4],
        "steps": 2000,
        "xi": [0.5, 0.0],
        "u0": [0.2, 0.3],
        "tol": {"painleve": 1e-4, "heat": 1e-5, "eisenstein_tau_law": 1e-5},
        "halving_ratio": [3.5, 4.5],
        "tau_law_step": 1e-4,
        "tau_law_samples": 20,
    },
    "hodograph": {
        "seed": 42,
        "driving": {"kind": "constant", "value": [0.25, 0.0]},
        "bracket": [1.0, 1.5],
        "gamma0": 0.1,
        "series_order": 12,
        "prepass_steps": 200,
        "h": 1e-5,
        "homogeneous": {"times": {"t0": 0.0, "t": [1.0, 2.5]}, "factors": [0.5, 2.0, 5.0]},
        "hydrodynamic": {"phi": {"kind": "linear", "a": 0.5, "b": 0.2}, "times": {"t0": 1.05, "t": [1.0, 0.3]}},
        "generating_z": [50.0, 0.0],
        "consistency_sub_bracket": [1.2, 1.45],
        "tol": {
            "root": 1e-10,
            "homogeneity": 1e-9,
            "hydrodynamic": 1e-4,
            "t0_independence": 1e-10,
            "generating": 1e-4,
            "speeds_consistency": 1e-7,
        },
    },
}


# ------------------------------------------------------------------ helpers

def _merge(base, over):
    out = copy.deepcopy(base)
    for k, v in over.items():
        if isinstance(v, dict) and isinstance(out.get(k), dict):
            out[k] = _merge(out[k], v)
        else:
            out[k] = v
    return out


def _cplx(x, what):
    if isinstance(x, (int, float)):
        return complex(x)
    if isinstance(x, (list, tuple)) and len(x) == 2 and all(isinstance(v, (int, float)) for v in x):
        return complex(x[0], x[1])
    raise ConfigError(f"{what}: expected a number or [re, im], got {x!r}")


def _finite(x):
    if isinstance(x, float) and not math.isfinite(x):
        return None if math.isnan(x) else ("inf" if x > 0 else "-inf")
    if isinstance(x, dict):
        return {k: _finite(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_finite(v) for v in x]
    if isinstance(x, (np.floating,)):
        return _finite(float(x))
    if isinstance(x, np.integer):
        return int(x)
    if isinstance(x, np.bool_):
        return bool(x)
    return x


def _check(name, anchor, value, tol, samples=1, extra=None, passed=None):
    value = float(value)
    ok = (value < tol) if passed is None else passed
    return CheckResult(name, anchor, int(samples), value, float(tol), bool(ok), extra)


def _scale_all(cfg, factor):
    out = dict(cfg)
    for k, v in cfg.items():
        if k == "tol" and isinstance(v, dict):
            out[k] = {kk: vv * factor for kk, vv in v.items()}
        elif k.startswith("tol_") and isinstance(v, (int, float)):
            out[k] = v * factor
    return out


def environment():
    import scipy

    env = {
        "package_version": __version__,
        "python": platform.python_version(),
        "numpy": np.__version__,
        "scipy": scipy.__version__,
        "kernel_backend": BACKEND,
        "platform": platform.system(),
    }
    try:
        import numba

        env["numba"] = numba.__version__
    except ImportError:
        env["numba"] = None
    return env


def build_report(command, cfg, checks, aborted=None):
    checks = sorted(checks, key=lambda c: c.name)
    passed = bool(checks) and all(c.passed for c in checks) and aborted is None
    rep = {
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "config": cfg,
        "checks": [c.to_dict() for c in checks],
        "passed": passed,
        "environment": environment(),
        "timestamp": _dt.datetime.now(_dt.timezone.utc).isoformat(),
    }
    if aborted is not None:
        rep["aborted"] = aborted
    return _finite(rep)


def report_bytes(report, with_timestamp=True):
    rep = dict(report)
    if not with_timestamp:
        rep.pop("timestamp", None)
    return (json.dumps(rep, indent=2, sort_keys=True) + "\n").encode()


def _driver(spec):
    kind = spec.get("kind")
    if kind == "constant":
        return DrivingFunction.constant(_cplx(spec.get("value", 0.0), "driving.value"))
    if kind == "linear":
        # xi(s) = a + b s, stored as a two-point table
        a = _cplx(spec.get("a", 0.0), "driving.a")
        b = _cplx(spec.get("b", 0.0), "driving.b")
        return DrivingFunction.table([0.0, 1.0], [a, a + b])
    if kind == "table":
        s = spec.get("s")
        xi = spec.get("xi")
        if not isinstance(s, list) or not isinstance(xi, list):
            raise ConfigError("table driver needs lists 's' and 'xi'")
        return DrivingFunction.table(s, [_cplx(x, "driving.xi") for x in xi])
    raise ConfigError(f"unknown driving kind {kind!r} (constant, linear, table)")


def _path(cfg):
    try:
        return TauPath(_cplx(cfg["tau_start"], "tau_start"), _cplx(cfg["tau_end"], "tau_end"), int(cfg["steps"]))
    except EllipticDKPError as exc:
        raise ConfigError(str(exc)) from exc


def _positive_int(cfg, key):
    v = cfg.get(key)
    if not isinstance(v, int) or isinstance(v, bool) or v < 1:
        raise ConfigError(f"{key} must be a positive integer, got {v!r}")
    return v


# ------------------------------------------------------------------ commands

def cmd_identities(cfg):
    n = _positive_int(cfg, "samples")
    try:
        samples = draw_samples(np.random.default_rng(cfg["seed"]), n, tuple(cfg["im_tau"]), tuple(cfg["re_tau"]),
                               cfg["clearance"], cfg.get("max_nome"))
    except (ValueError, EllipticDKPError) as exc:
        raise ConfigError(str(exc)) from exc
    checks = run_exact(samples, cfg["tol_exact"]) + run_fd(samples, cfg["tol_fd"], cfg["fd_step"])
    return checks, {}, None


def cmd_curve(cfg, out_dir):
    n = _positive_int(cfg, "samples")
    try:
        cp = CurveParams(_cplx(cfg["gamma"], "gamma"), ModularParam(_cplx(cfg["tau"], "tau")))
    except EllipticDKPError as exc:
        raise ConfigError(str(exc)) from exc
    rng = np.random.default_rng(cfg["seed"])
    m = cp.m
    us = []
    while len(us) < n:
        a, b = rng.uniform(-0.5, 0.5, size=2)
        u = a + b * m.tau
        if min(lattice_distance(u, m, w) for w in m.half_periods()) >= cfg["clearance"]:
            us.append(u)
    us = np.array(us)
    w = w_of_u(us, cp)
    p = p_of_u(us, cp)
    res = curve_residual(us, cp)
    ratio = [ratio_identity_residual(us[i], us[i + 1], cp) for i in range(n - 1)]
    trip = []
    for ui, wi in zip(us, w):
        back = u_from_w(wi, m)
        trip.append(min(lattice_distance(back - ui, m), lattice_distance(back + ui, m)))
    tol = cfg["tol"]
    checks = [
        _check("curve_equation", "p^2 = R^2 (w + 1/w) + V", np.max(res), tol, n),
        _check("u_from_w_round_trip", "u -> w(u) -> u up to u -> -u and lattice shifts", max(trip), tol, n),
    ]
    if ratio:
        checks.append(_check("ratio_identity", "(w1 - w2)/(p1 + p2) as a theta quotient", max(ratio), tol, n - 1))
    if m.tau.real == 0:
        back = tau_from_modulus(modulus_ratio(m).real)
        checks.append(_check("tau_from_modulus_round_trip", "tau -> -V/R^2 -> tau", abs(back.tau - m.tau), tol))
    rows = np.column_stack([us.real, us.imag, w.real, w.imag, p.real, p.imag, res])
    files = {}
    if cfg.get("csv"):
        path = Path(out_dir) / cfg["csv"]
        np.savetxt(path, rows, delimiter=",", fmt="%.16e", comments="",
                   header="re_u,im_u,re_w,im_w,re_p,im_p,curve_residual")
        files["csv"] = cfg["csv"]
    return checks, files, None


def _abort_record(exc):
    return {"error": type(exc).__name__, "message": str(exc), "s": getattr(exc, "s", None),
            "location": (None if getattr(exc, "location", None) is None
                         else [exc.location.real, exc.location.imag])}


def cmd_evolve(cfg, out_dir):
    path = _path(cfg)
    drv = _driver(cfg["driving"])
    tracers = [_cplx(t, "tracers") for t in cfg["tracers"]]
    norm = cfg["normalization"]
    if norm not in ("standard", "shifted", "painleve"):
        raise ConfigError(f"normalization must be standard, shifted or painleve, got {norm!r}")
    N = int(cfg.get("series_order", 0))
    gamma0 = _cplx(cfg["gamma0"], "gamma0")
    series0 = seed_series(gamma0, N) if N > 0 else None
    tol = cfg["tol"]
    try:
        traj = evolve(path, drv, tracers, series0=series0, gamma0=gamma0, normalization=norm)
    except (NearPole, StepTooLarge) as exc:
        rec = _abort_record(exc)
        return [_check("integration", "flow integrated to the path end", 1.0, 0.5, extra=rec, passed=False)], {}, rec
    files = {}
    if cfg.get("csv"):
        traj.to_csv(Path(out_dir) / cfg["csv"])
        files["csv"] = cfg["csv"]
    if cfg.get("json"):
        traj.to_json(Path(out_dir) / cfg["json"])
        files["json"] = cfg["json"]
    checks = [_check("integration", "flow integrated to the path end", 0.0, 0.5, len(traj.s))]
    nodes = int(cfg["quadrature_nodes"])
    zero = [j for j, t in enumerate(tracers) if t == 0]
    live = [j for j, t in enumerate(tracers) if t != 0]
    if norm == "standard":
        if zero:
            drift = max(float(np.max(np.abs(traj.u[:, j]))) for j in zero)
            checks.append(_check("zero_tracer_fixed", "u = 0 is a fixed point of the flow", drift, tol["zero_tracer"], len(traj.s)))
        for j in range(len(tracers)):
            r = total_derivative_residual(traj, j)
            checks.append(_check(f"total_derivative_u{j}", "4 pi i dS(u)/dtau = S'(xi) S'(u + xi)", np.max(r),
                                 tol["total_derivative"], r.size))
        for a in range(len(live)):
            for b in range(a + 1, len(live)):
                j1, j2 = live[a], live[b]
                r = consistency_residual(traj, j1, j2)
                checks.append(_check(f"consistency_u{j1}_u{j2}",
                                     "dS(u1)/dtau dS(u2)/dtau = dlogR/dtau dS(u1 - u2)/dtau",
                                     np.max(r), tol["consistency"], r.size))
        if len(live) >= 2:
            r = trajectory_substituted_residual(traj)
            checks.append(_check("substituted_identity", "consistency relation with the flow substituted (no differencing)",
                                 np.max(r), tol["substituted_identity"], r.size))
        fine = evolve(TauPath(path.start, path.end, 2 * path.steps), drv, tracers, gamma0=gamma0)
        finer = evolve(TauPath(path.start, path.end, 4 * path.steps), drv, tracers, gamma0=gamma0)
        d1 = float(np.max(np.abs(traj.u[-1] - fine.u[-1])))
        d2 = float(np.max(np.abs(fine.u[-1] - finer.u[-1])))
        checks.append(_check("step_halving", "endpoint change when the RK4 step is halved", d1, tol["step_halving"],
                             extra={"change_h": d1, "change_h_half": d2,
                                    "ratio": (d1 / d2) if d2 > 0 else None}))
    if norm in ("standard", "shifted"):
        q = log_R_quadrature(path, drv, gamma0, nodes)
        checks.append(_check("log_R_quadrature", "log R end value = quadrature of S'(xi)^2/(4 pi i)",
                             abs(traj.log_R[-1] - q) / max(1.0, abs(q)), tol["quadrature"]))
    if norm == "shifted":
        q = c0_quadrature(path, drv, 0.0, nodes)
        checks.append(_check("c0_quadrature", "c0 end value = quadrature of -E1(xi|tau/2)/(4 pi i)",
                             abs(traj.c0[-1] - q) / max(1.0, abs(q)), tol["quadrature"]))
    return checks, files, None


def cmd_painleve(cfg, out_dir):
    path = _path(cfg)
    xi = _cplx(cfg["xi"], "xi")
    u0 = _cplx(cfg["u0"], "u0")
    drv = DrivingFunction.constant(xi)
    tol = cfg["tol"]
    try:
        traj = evolve(path, drv, [u0], normalization="painleve")
        fine = evolve(TauPath(path.start, path.end, 2 * path.steps), drv, [u0], normalization="painleve")
    except (NearPole, StepTooLarge) as exc:
        rec = _abort_record(exc)
        return [_check("integration", "flow integrated to the path end", 1.0, 0.5, extra=rec, passed=False)], {}, rec
    r = painleve_residual(traj, 0)
    rf = painleve_residual(fine, 0)
    ratio = float(np.max(r) / np.max(rf))
    lo, hi = cfg["halving_ratio"]
    checks = [
        _check("painleve_elliptic_form", "(2 pi i)^2 d^2u/dtau^2 = wp'(u + xi)/2", np.max(r), tol["painleve"], r.size),
        _check("painleve_step_halving", "residual ratio under step halving (second differences)", ratio, hi,
               extra={"ratio": ratio, "range": [lo, hi], "halved_residual": float(np.max(rf))},
               passed=lo <= ratio <= hi),
    ]
    hr = heat_residual(traj, 0)
    checks.append(_check("heat_along_trajectory", "4 pi i d/dtau E1(u + xi) = E1''(u + xi)", np.max(hr), tol["heat"], hr.size))
    idx = np.linspace(0, len(traj.s) - 1, int(cfg["tau_law_samples"])).astype(int)
    tl = [eisenstein_tau_law_residual(traj.u[i, 0] + xi, traj.tau[i], cfg["tau_law_step"]) for i in idx]
    checks.append(_check("eisenstein_tau_law_on_trajectory", "4 pi i dE1/dtau = 2 E1 E1' + E1''", max(tl),
                         tol["eisenstein_tau_law"], len(tl)))
    try:
        evolve(TauPath(path.start, path.end, 10), DrivingFunction.constant(0.0), [1e-9], normalization="painleve")
        guarded = False
    except NearPole:
        guarded = True
    checks.append(_check("pole_guard", "xi = 0, u0 near 0 is rejected", 0.0 if guarded else 1.0, 0.5, passed=guarded))
    return checks, {}, None


def _times(spec):
    try:
        return TimeVector(float(spec["t0"]), tuple(float(x) for x in spec["t"]))
    except (KeyError, TypeError, ValueError, EllipticDKPError) as exc:
        raise ConfigError(f"bad times entry {spec!r}: {exc}") from exc


def _phi(spec):
    kind = spec.get("kind")
    if kind == "zero":
        return phi_zero()
    if kind == "linear":
        return phi_linear(float(spec["a"]), float(spec["b"]))
    raise ConfigError(f"unknown Phi kind {kind!r} (zero, linear)")


def cmd_hodograph(cfg, out_dir):
    drv = _driver(cfg["driving"])
    lo, hi = cfg["bracket"]
    tol = cfg["tol"]
    N = _positive_int(cfg, "series_order")
    try:
        sp = SpeedTable(drv, 1j * lo, 1j * hi, N=N, gamma0=float(cfg["gamma0"]), steps=int(cfg["prepass_steps"]))
    except EllipticDKPError as exc:
        raise ConfigError(str(exc)) from exc
    h = float(cfg["h"])
    checks = []
    hom = HodographProblem(sp, phi_zero(), include_t0=False)
    th = _times(cfg["homogeneous"]["times"])
    root = hodograph_solve(hom, th)
    checks.append(_check("root_residual_homogeneous", "sum_k t_k phi_k = Phi at the root",
                         abs(objective(hom, th, root)), tol["root"], extra={"root": [root.real, root.imag]}))
    checks.append(_check("homogeneity", "tau(c t) = tau(t) for Phi = 0",
                         homogeneity_residual(hom, th, tuple(cfg["homogeneous"]["factors"])), tol["homogeneity"]))
    checks.append(_check("t0_independence", "dtau/dt0 = 0 without a t0 term", t0_independence(hom, th, h),
                         tol["t0_independence"]))
    try:
        hodograph_solve(hom, TimeVector(th.t0, tuple(0.0 for _ in th.t)))
        rejected = False
    except NoSignChange:
        rejected = True
    checks.append(_check("degenerate_times_rejected", "all t_k = 0 with Phi = 0 has no isolated root",
                         0.0 if rejected else 1.0, 0.5, passed=rejected))
    hyd = HodographProblem(sp, _phi(cfg["hydrodynamic"]["phi"]), include_t0=True)
    t = _times(cfg["hydrodynamic"]["times"])
    root = hodograph_solve(hyd, t)
    checks.append(_check("root_residual_hydrodynamic", "t0 + sum_k t_k phi_k = Phi at the root",
                         abs(objective(hyd, t, root)), tol["root"], extra={"root": [root.real, root.imag]}))
    grad = time_gradient(hyd, t, h)
    for k in range(1, t.K + 1):
        checks.append(_check(f"hydrodynamic_k{k}", "dtau/dt_k = phi_k dtau/dt0",
                             hydrodynamic_residual(hyd, t, k, h, grad=grad, root=root), tol["hydrodynamic"]))
    z = _cplx(cfg["generating_z"], "generating_z")
    checks.append(_check("generating_equation", "nabla(z) tau = S'(u(z) + xi)/S'(xi) dtau/dt0 (nabla truncated at K)",
                         generating_residual(hyd, t, z, h, grad=grad, root=root), tol["generating"],
                         extra={"z": [z.real, z.imag]}))
    a, b = cfg["consistency_sub_bracket"]
    s_start = (a - lo) / (hi - lo)
    i0 = int(round(s_start * sp.steps))
    y_start = sp.traj.tau[i0]
    sub = SpeedTable(drv, y_start, 1j * b, N=N, series0=sp.traj.series_at(i0),
                     steps=max(4, int(round(sp.steps * (b - y_start.imag) / (hi - lo))) + 7))
    sub_root = root if y_start.imag <= root.imag <= b else 1j * (0.5 * (y_start.imag + b))
    d = np.max(np.abs(sp.speeds(sub_root, t.K) - sub.speeds(sub_root, t.K)))
    checks.append(_check("speeds_consistency", "phi_k from a re-seeded pre-pass on a shorter bracket", d,
                         tol["speeds_consistency"], extra={"tau": [sub_root.real, sub_root.imag]}))
    return checks, {}, None


# ------------------------------------------------------------------ entry point

def _parser():
    ap = argparse.ArgumentParser(prog="ellipdkp", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        p = sub.add_parser(name)
        p.add_argument("--config", type=Path, help="JSON config; missing keys take the defaults")
        p.add_argument("--seed", type=int)
        p.add_argument("--out", type=Path, help=f"output directory (default ${OUT_ENV} or .)")
        p.add_argument("--tol-scale", type=float, help="multiply every tolerance")
        p.add_argument("--steps", type=int, help="override the integrator step count")
        p.add_argument("--quiet", action="store_true")
    return ap


def resolve_config(command, path=None, seed=None, tol_scale=None, steps=None):
    user = {}
    if path is not None:
        try:
            user = json.loads(Path(path).read_text())
        except (OSError, json.JSONDecodeError) as exc:
            raise ConfigError(f"cannot read config {path}: {exc}") from exc
        if not isinstance(user, dict):
            raise ConfigError("config must be a JSON object")
        unknown = set(user) - set(DEFAULTS[command])
        if unknown:
            raise ConfigError(f"unknown config keys for {command}: {sorted(unknown)}")
    cfg = _merge(DEFAULTS[command], user)
    if seed is not None:
        cfg["seed"] = seed
    if steps is not None:
        if steps < 1:
            raise ConfigError("--steps must be positive")
        key = "prepass_steps" if command == "hodograph" else "steps"
        if key in cfg:
            cfg[key] = steps
    if tol_scale is not None:
        if not tol_scale > 0:
            raise ConfigError("--tol-scale must be positive")
        cfg = _scale_all(cfg, tol_scale)
    return cfg


def run(command, cfg, out_dir):
    runner = {
        "identities": lambda c, o: cmd_identities(c),
        "curve": cmd_curve,
        "evolve": cmd_evolve,
        "painleve": cmd_painleve,
        "hodograph": cmd_hodograph,
    }[command]
    checks, files, aborted = runner(cfg, out_dir)
    rep = build_report(command, cfg, checks, aborted)
    if files:
        rep["files"] = files
    return rep


def main(argv=None) -> int:
    args = _parser().parse_args(argv)
    out_dir = args.out or Path(os.environ.get(OUT_ENV, "."))
    try:
        cfg = resolve_config(args.command, args.config, args.seed, args.tol_scale, args.steps)
        out_dir.mkdir(parents=True, exist_ok=True)
        rep = run(args.command, cfg, out_dir)
    except (ConfigError, KeyError, TypeError) as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 2
    (out_dir / f"{args.command}_report.json").write_bytes(report_bytes(rep))
    if not args.quiet:
        for c in rep["checks"]:
            print(f"{'PASS' if c['passed'] else 'FAIL'}  {c['name']:<40s} {c['max_residual']!s:>24}  tol {c['tolerance']:g}")
        if "aborted" in rep:
            print(f"aborted: {rep['aborted']['message']}")
        print("overall:", "PASS" if rep["passed"] else "FAIL")
    return 0 if rep["passed"] else 1


if __name__ == "__main__":
    sys.exit(main())
