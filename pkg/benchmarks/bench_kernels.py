"""Compare the compiled density-evolution core against the numpy fallback.

Runs the same workloads through both backends and prints a timing table:
a single near-threshold fixed-point run, a helper-transfer evaluation,
and a full protograph-threshold bisection.

    python benchmarks/bench_kernels.py [--quick]
"""

import argparse
import time

import numpy as np

from scldpcl import _de_core_py
from scldpcl.pipelines import make_design
from scldpcl.protograph import couple, cutting_vector_sb

try:
    from scldpcl import _de_core
except ImportError:
    _de_core = None


def bisect(decoded, width=1e-5):
    lo, hi = 0.0, 1.0
    while hi - lo >= width:
        mid = 0.5 * (lo + hi)
        if decoded(mid):
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def make_workloads(quick):
    sb361 = cutting_vector_sb(3, 6, 1)
    sb242 = make_design(4, 6, 2, (2, 4), 2)
    chain = couple(cutting_vector_sb(4, 6, 1), 10 if quick else 50).matrix.entries

    def de_once(kernel):
        mat = sb242.matrix.entries
        a = mat.shape[0]
        base = np.ones(a)
        base[0] = base[1] = 0.6
        active = np.ones(a, np.uint8)
        active[-1] = active[-2] = 0
        kernel(mat, 0.4435, base, active, 200_000, 1e-12)

    def transfer_grid(kernel):
        mat = sb361.matrix.entries
        a = mat.shape[0]
        active = np.ones(a, np.uint8)
        active[-1] = 0
        for delta in np.linspace(0.0, 1.0, 21 if quick else 101):
            base = np.ones(a)
            base[0] = 1.0 - delta
            kernel(mat, 0.4239, base, active, 200_000, 1e-12)

    def coupled_threshold(kernel):
        a = chain.shape[0]
        base = np.ones(a)
        active = np.ones(a, np.uint8)

        def decoded(eps):
            _, _, sigma, _, _ = kernel(chain, eps, base, active, 1000, 1e-12)
            return bool(np.all(sigma < 1e-9))

        bisect(decoded, 1e-4 if quick else 1e-5)

    return [
        ("fixed point, clamped 6x6 block", de_once),
        ("transfer curve, 101-point delta grid", transfer_grid),
        (f"coupled-chain threshold ({chain.shape[0]}x{chain.shape[1]})", coupled_threshold),
    ]


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--quick", action="store_true", help="smaller workloads")
    args = parser.parse_args()

    backends = [("python", _de_core_py.de_fixed_point)]
    if _de_core is not None:
        backends.insert(0, ("compiled", _de_core.de_fixed_point))
    else:
        print("compiled core not built; timing the fallback only\n")

    workloads = make_workloads(args.quick)
    width = max(len(name) for name, _ in workloads)
    print(f"{'workload':<{width}}  " + "  ".join(f"{n:>10}" for n, _ in backends)
          + ("     speedup" if len(backends) == 2 else ""))
    for name, fn in workloads:
        times = []
        for _, kernel in backends:
            start = time.perf_counter()
            fn(kernel)
            times.append(time.perf_counter() - start)
        row = f"{name:<{width}}  " + "  ".join(f"{t:>9.3f}s" for t in times)
        if len(times) == 2 and times[0] > 0:
            row += f"  x{times[1] / times[0]:>9.1f}"
        print(row)


if __name__ == "__main__":
    main()
