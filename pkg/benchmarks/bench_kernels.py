#!/usr/bin/env python3
"""Benchmark the compiled finite-field kernel against the pure-Python twin.

The kernel carries the hot inner loops of the enumeration oracles (matrix
products and rank computations over small fields during group closure and
kernel-dimension profiling).  Run after `pip install -e .`:

    python benchmarks/bench_kernels.py
"""

import random
import time

from hypermono.algebra import _fqcore_py
from hypermono.algebra.fq import field

try:
    from hypermono.algebra import _fqcore

    KERNELS = [("cython", _fqcore), ("python", _fqcore_py)]
except ImportError:
    print("compiled kernel not built; benchmarking the pure-Python twin only")
    KERNELS = [("python", _fqcore_py)]


def bench_mat_mul(kernel, F, n, reps):
    rng = random.Random(7)
    mats = [tuple(rng.randrange(F.q) for _ in range(n * n)) for _ in range(64)]
    t0 = time.perf_counter()
    acc = mats[0]
    for i in range(reps):
        acc = kernel.mat_mul(acc, mats[i % 64], n, F.q, F.mul, F.add)
    return time.perf_counter() - t0


def bench_mat_rank(kernel, F, n, reps):
    rng = random.Random(11)
    mats = [tuple(rng.randrange(F.q) for _ in range(n * n)) for _ in range(64)]
    t0 = time.perf_counter()
    for i in range(reps):
        kernel.mat_rank(mats[i % 64], n, F.q, F.mul, F.add, F.neg, F.inv)
    return time.perf_counter() - t0


def bench_closure(n, q, label):
    """End-to-end: full group enumeration (kernel selected at import)."""
    from hypermono.weilgl import general_linear_group

    general_linear_group.cache_clear()
    t0 = time.perf_counter()
    G = general_linear_group(n, q)
    dt = time.perf_counter() - t0
    print(f"  closure GL_{n}({q})  order {G.order:>6}   {dt * 1000:8.1f} ms   [{label}]")


def main():
    cases = [(field(3, 2), 3, 20000), (field(5, 1), 4, 20000), (field(2, 1), 4, 40000)]
    print("mat_mul:")
    for F, n, reps in cases:
        row = []
        for name, kernel in KERNELS:
            dt = bench_mat_mul(kernel, F, n, reps)
            row.append(f"{name} {dt * 1e6 / reps:7.2f} us/op")
        print(f"  {F}  n={n}:  " + "   ".join(row))
    print("mat_rank:")
    for F, n, reps in cases:
        row = []
        for name, kernel in KERNELS:
            dt = bench_mat_rank(kernel, F, n, reps)
            row.append(f"{name} {dt * 1e6 / reps:7.2f} us/op")
        print(f"  {F}  n={n}:  " + "   ".join(row))
    from hypermono.algebra.fq import KERNEL_IMPLEMENTATION

    print(f"active kernel for the package: {KERNEL_IMPLEMENTATION}")
    bench_closure(3, 3, KERNEL_IMPLEMENTATION)


if __name__ == "__main__":
    main()
