"""Compare the compiled and numpy modular elimination kernels.

Usage: python3 benchmarks/bench_kernel.py [--sizes 32,64,128] [--repeat 3] [--pipeline]

--pipeline also times ``froblab taftd --p 2 --d 1,2 --reconstruct`` under each
backend (selected through FROBLAB_KERNEL in a subprocess).
"""
import argparse
import os
import subprocess
import sys
import time

import numpy as np

from froblab import _kernel_py

try:
    from froblab import _kernel
except ImportError:  # extension not built
    _kernel = None

Q = 2147483629  # prime below 2^31


def bench(fn, A, repeat):
    best = float("inf")
    for _ in range(repeat):
        X = np.ascontiguousarray(A.copy())
        t0 = time.perf_counter()
        out = fn(X, Q)
        best = min(best, time.perf_counter() - t0)
    return best, (out[0], list(out[1]), X)


def main(argv=None):
    ap = argparse.ArgumentParser()
    ap.add_argument("--sizes", default="32,64,128,256")
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--pipeline", action="store_true")
    args = ap.parse_args(argv)
    rng = np.random.default_rng(args.seed)
    print("n\tpython_s\tcython_s\tspeedup\tagree")
    for n in (int(s) for s in args.sizes.split(",")):
        A = rng.integers(0, Q, size=(n, n + n // 2), dtype=np.int64)
        tp, rp = bench(_kernel_py.rref_mod, A, args.repeat)
        if _kernel is None:
            print(f"{n}\t{tp:.4f}\t-\t-\t-")
            continue
        tc, rc = bench(_kernel.rref_mod, A, args.repeat)
        agree = rp[0] == rc[0] and rp[1] == rc[1] and np.array_equal(rp[2], rc[2])
        print(f"{n}\t{tp:.4f}\t{tc:.4f}\t{tp / tc:.1f}x\t{agree}")
    if args.pipeline:
        print("pipeline\tbackend\tseconds")
        for backend in ("cython", "python"):
            cmd = [sys.executable, "-m", "froblab.cli", "taftd", "--p", "2", "--d", "1,2", "--reconstruct"]
            t0 = time.perf_counter()
            subprocess.run(cmd, env=dict(os.environ, FROBLAB_KERNEL=backend), check=True, capture_output=True)
            print(f"taftd(1,2)\t{backend}\t{time.perf_counter() - t0:.2f}")


if __name__ == "__main__":
    main()
