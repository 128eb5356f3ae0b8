"""Hot loop: the four Jacobi theta q-series and their first three u-derivatives.

Two interchangeable implementations are provided. The numba one sums term by
term with an adaptive stop; the numpy one picks the window size up front and
sums with broadcasting. Set ``ELLIPDKP_DISABLE_NUMBA=1`` to force the numpy
path (it is also used when numba cannot be imported).

Both return an array ``out[p, a, j]`` = d^j/du^j theta_{a+1}(v_p | tau) for
j = 0..3, plus the number of terms used. The caller is responsible for
argument reduction (|Im v| should not exceed Im tau by much).
"""
import cmath
import math
import os

import numpy as np

NDERIV = 4

_disabled = os.environ.get("ELLIPDKP_DISABLE_NUMBA", "").strip().lower() not in ("", "0", "false", "no")

try:
    if _disabled:
        raise ImportError("numba disabled by ELLIPDKP_DISABLE_NUMBA")
    from numba import njit

    HAVE_NUMBA = True
except ImportError:
    HAVE_NUMBA = False

    def njit(*args, **kwargs):
        if args and callable(args[0]):
            return args[0]
        return lambda f: f


def _theta_block_py(vs, tau, eps, max_terms, out):
    # Plain-Python body; compiled by numba when available.
    pi = math.pi
    im_tau = tau.imag
    used = 0
    for p in range(vs.shape[0]):
        v = vs[p]
        aim = abs(v.imag)
        s1 = np.zeros(NDERIV, dtype=np.complex128)
        s2 = np.zeros(NDERIV, dtype=np.complex128)
        s3 = np.zeros(NDERIV, dtype=np.complex128)
        s4 = np.zeros(NDERIV, dtype=np.complex128)
        s3[0] = 1.0
        s4[0] = 1.0
        done = False
        n = 0
        while n < max_terms:
            # half-integer family, m = n + 1/2
            m = n + 0.5
            k = 2.0 * pi * m
            qm = cmath.exp(1j * pi * tau * m * m)
            ea = cmath.exp(1j * k * v)
            eb = cmath.exp(-1j * k * v)
            sign = 1.0 if n % 2 == 0 else -1.0
            ik = 1j * k
            pa = 1.0 + 0j
            pb = 1.0 + 0j
            for j in range(NDERIV):
                ca = pa * ea
                cb = pb * eb
                s1[j] += sign * qm * (ca - cb) / 1j
                s2[j] += qm * (ca + cb)
                pa *= ik
                pb *= -ik
            # integer family, n + 1
            nn = n + 1
            k2 = 2.0 * pi * nn
            qn = cmath.exp(1j * pi * tau * nn * nn)
            ea = cmath.exp(1j * k2 * v)
            eb = cmath.exp(-1j * k2 * v)
            sign4 = 1.0 if nn % 2 == 0 else -1.0
            ik = 1j * k2
            pa = 1.0 + 0j
            pb = 1.0 + 0j
            for j in range(NDERIV):
                c = qn * (pa * ea + pb * eb)
                s3[j] += c
                s4[j] += sign4 * c
                pa *= ik
                pb *= -ik
            # bounds on the next terms of both families
            mh = n + 1.5
            bh = 2.0 * math.exp(-pi * im_tau * mh * mh + 2.0 * pi * mh * aim)
            mi = n + 2.0
            bi = 2.0 * math.exp(-pi * im_tau * mi * mi + 2.0 * pi * mi * aim)
            ok = True
            fh = 1.0
            fi = 1.0
            for j in range(NDERIV):
                lim_h = eps * (1.0 + min(abs(s1[j]), abs(s2[j])))
                lim_i = eps * (1.0 + min(abs(s3[j]), abs(s4[j])))
                if bh * fh >= lim_h or bi * fi >= lim_i:
                    ok = False
                    break
                fh *= 2.0 * pi * mh
                fi *= 2.0 * pi * mi
            n += 1
            if ok:
                done = True
                break
        if not done:
            return -1
        if n > used:
            used = n
        for j in range(NDERIV):
            out[p, 0, j] = s1[j]
            out[p, 1, j] = s2[j]
            out[p, 2, j] = s3[j]
            out[p, 3, j] = s4[j]
    return used


if HAVE_NUMBA:
    _theta_block_nb = njit(cache=True)(_theta_block_py)
else:
    _theta_block_nb = None


def theta_block_numba(vs, tau, eps=1e-16, max_terms=64):
    """Adaptive term-by-term summation (compiled when numba is present)."""
    vs = np.ascontiguousarray(vs, dtype=np.complex128)
    out = np.empty((vs.shape[0], 4, NDERIV), dtype=np.complex128)
    fn = _theta_block_nb if HAVE_NUMBA else _theta_block_py
    used = fn(vs, complex(tau), float(eps), int(max_terms), out)
    return out, used


def _window_size(im_tau, aim, eps, max_terms):
    for n in range(max_terms):
        mh = n + 1.5
        mi = n + 2.0
        bh = 2.0 * math.exp(-math.pi * im_tau * mh * mh + 2.0 * math.pi * mh * aim)
        bi = 2.0 * math.exp(-math.pi * im_tau * mi * mi + 2.0 * math.pi * mi * aim)
        if bh * (2 * math.pi * mh) ** (NDERIV - 1) < eps and bi * (2 * math.pi * mi) ** (NDERIV - 1) < eps:
            return n + 1
    return -1


def theta_block_numpy(vs, tau, eps=1e-16, max_terms=64):
    """Fixed-window vectorized summation; window chosen from an a-priori bound."""
    vs = np.asarray(vs, dtype=np.complex128).reshape(-1)
    tau = complex(tau)
    aim = float(np.max(np.abs(vs.imag))) if vs.size else 0.0
    nt = _window_size(tau.imag, aim, eps, max_terms)
    if nt < 0:
        return np.empty((vs.shape[0], 4, NDERIV), dtype=np.complex128), -1
    n = np.arange(nt)
    j = np.arange(NDERIV)
    m = n + 0.5
    qm = np.exp(1j * np.pi * tau * m * m)
    k = 2 * np.pi * m
    ea = np.exp(1j * np.outer(vs, k))  # (P, T)
    eb = np.exp(-1j * np.outer(vs, k))
    pa = (1j * k)[None, :] ** j[:, None]  # (J, T)
    pb = (-1j * k)[None, :] ** j[:, None]
    sign = np.where(n % 2 == 0, 1.0, -1.0)
    ca = ea[:, None, :] * pa[None]
    cb = eb[:, None, :] * pb[None]
    th1 = ((sign * qm) * (ca - cb) / 1j).sum(axis=-1)
    th2 = (qm * (ca + cb)).sum(axis=-1)

    ni = n + 1.0
    qn = np.exp(1j * np.pi * tau * ni * ni)
    k2 = 2 * np.pi * ni
    ea = np.exp(1j * np.outer(vs, k2))
    eb = np.exp(-1j * np.outer(vs, k2))
    pa = (1j * k2)[None, :] ** j[:, None]
    pb = (-1j * k2)[None, :] ** j[:, None]
    c = qn * (ea[:, None, :] * pa[None] + eb[:, None, :] * pb[None])
    sign4 = np.where((n + 1) % 2 == 0, 1.0, -1.0)
    th3 = c.sum(axis=-1)
    th4 = (sign4 * c).sum(axis=-1)
    th3[:, 0] += 1.0
    th4[:, 0] += 1.0
    out = np.stack([th1, th2, th3, th4], axis=1)
    return out, nt


BACKEND = "numba" if HAVE_NUMBA else "numpy"


def theta_block(vs, tau, eps=1e-16, max_terms=64):
    if HAVE_NUMBA:
        return theta_block_numba(vs, tau, eps, max_terms)
    return theta_block_numpy(vs, tau, eps, max_terms)
