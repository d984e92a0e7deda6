"""Timing comparison between the compiled and pure Python kernels.

Runs the three numeric kernels on seeded random inputs of growing size
and prints one table row per (kernel, size) with the best wall time for
each backend and the resulting speedup.  Results from the two backends
are checked against each other before timings are reported, so a run
that prints a table is also a small correctness test.

Usage::

    python3 benchmarks/bench_kernels.py [--repeats 5] [--seed 7]
"""

import argparse
import random
import time

import numpy as np

from signedgraph.kernels import _pykern

try:
    from signedgraph.kernels import _ckern
except ImportError:
    _ckern = None

_JACOBI_SIZES = (16, 32, 64)
_SWITCH_SIZES = (12, 15, 18)
_DELETE_SIZES = (10, 12, 14)


def _random_symmetric(n, rng):
    """Dense symmetric matrix with entries drawn from [-1, 1)."""
    a = np.array([[rng.uniform(-1.0, 1.0) for _ in range(n)] for _ in range(n)])
    return (a + a.T) / 2.0


def _random_edges(n, p, q, rng):
    """Edge arrays (us, vs, signs) of a G(n, p) graph with negative rate q."""
    us, vs, signs = [], [], []
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                us.append(u)
                vs.append(v)
                signs.append(-1 if rng.random() < q else 1)
    return us, vs, signs


def _best_time(fn, args, repeats):
    best = None
    for _ in range(repeats):
        start = time.perf_counter()
        out = fn(*args)
        elapsed = time.perf_counter() - start
        if best is None or elapsed < best:
            best = elapsed
    return best, out


def _row(label, size, py_time, c_time):
    if c_time is None:
        return "%-26s %-8s %10.3f ms %12s %10s" % (
            label, size, py_time * 1e3, "-", "-")
    return "%-26s %-8s %10.3f ms %9.3f ms %9.1fx" % (
        label, size, py_time * 1e3, c_time * 1e3, py_time / c_time)


def run(repeats, seed):
    rng = random.Random(seed)
    rows = []

    for n in _JACOBI_SIZES:
        a = _random_symmetric(n, rng)
        py_t, (py_w, _) = _best_time(_pykern.jacobi_eigh, (a,), repeats)
        c_t = None
        if _ckern is not None:
            c_t, (c_w, _) = _best_time(_ckern.jacobi_eigh, (a,), repeats)
            if not np.allclose(sorted(py_w), sorted(c_w), atol=1e-9):
                raise AssertionError("jacobi backends disagree at n=%d" % n)
        rows.append(_row("jacobi_eigh", "n=%d" % n, py_t, c_t))

    for n in _SWITCH_SIZES:
        args = (n,) + _random_edges(n, 0.4, 0.5, rng)
        py_t, py_out = _best_time(_pykern.min_negative_switching, args, repeats)
        c_t = None
        if _ckern is not None:
            c_t, c_out = _best_time(_ckern.min_negative_switching, args, repeats)
            if tuple(py_out) != tuple(c_out):
                raise AssertionError("switching backends disagree at n=%d" % n)
        rows.append(_row("min_negative_switching", "n=%d" % n, py_t, c_t))

    for n in _DELETE_SIZES:
        args = (n,) + _random_edges(n, 0.5, 0.5, rng)
        py_t, py_out = _best_time(_pykern.min_balancing_vertex_set, args, repeats)
        c_t = None
        if _ckern is not None:
            c_t, c_out = _best_time(
                _ckern.min_balancing_vertex_set, args, repeats)
            if (py_out[0], sorted(py_out[1])) != (c_out[0], sorted(c_out[1])):
                raise AssertionError("deletion backends disagree at n=%d" % n)
        rows.append(_row("min_balancing_vertex_set", "n=%d" % n, py_t, c_t))

    header = "%-26s %-8s %13s %12s %10s" % (
        "kernel", "size", "python", "cython", "speedup")
    print(header)
    print("-" * len(header))
    for row in rows:
        print(row)
    if _ckern is None:
        print()
        print("compiled extension not available; showing python times only")


def main(argv=None):
    parser = argparse.ArgumentParser(
        description="benchmark the signedgraph numeric kernels")
    parser.add_argument("--repeats", type=int, default=5,
                        help="timed runs per case, best is kept (default 5)")
    parser.add_argument("--seed", type=int, default=7,
                        help="random seed for the inputs (default 7)")
    args = parser.parse_args(argv)
    run(args.repeats, args.seed)


if __name__ == "__main__":
    main()
