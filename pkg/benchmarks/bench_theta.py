"""Compare the compiled and the vectorized theta kernels.

    python3 benchmarks/bench_theta.py [--points 1 64 1024] [--repeat 20]

Both kernels evaluate theta_1..theta_4 and three u-derivatives on the same
points; the script reports the best time per call and their max difference.
"""
import argparse
import timeit

import numpy as np

from ellipdkp import _kernels


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--points", type=int, nargs="+", default=[1, 16, 256, 4096])
    ap.add_argument("--repeat", type=int, default=20)
    ap.add_argument("--tau", type=complex, default=0.1 + 1.1j)
    args = ap.parse_args(argv)

    rng = np.random.default_rng(0)
    tau = args.tau
    print(f"numba available: {_kernels.HAVE_NUMBA}   default backend: {_kernels.BACKEND}   tau = {tau}")
    print(f"{'points':>8} {'numba [us]':>12} {'numpy [us]':>12} {'speedup':>9} {'max diff':>10}")
    for n in args.points:
        v = rng.uniform(-0.5, 0.5, n) + 1j * rng.uniform(-0.5, 0.5, n) * tau.imag
        a, _ = _kernels.theta_block_numba(v, tau)  # compiles on first call
        b, _ = _kernels.theta_block_numpy(v, tau)
        diff = float(np.max(np.abs(a - b) / np.maximum(1, np.abs(b))))
        t_nb = min(timeit.repeat(lambda: _kernels.theta_block_numba(v, tau), number=5, repeat=args.repeat)) / 5
        t_np = min(timeit.repeat(lambda: _kernels.theta_block_numpy(v, tau), number=5, repeat=args.repeat)) / 5
        print(f"{n:>8d} {t_nb * 1e6:>12.1f} {t_np * 1e6:>12.1f} {t_np / t_nb:>9.2f} {diff:>10.1e}")


if __name__ == "__main__":
    main()
