"""Time the numba and pure-numpy kernel backends on the same workloads.

    python3 benchmarks/bench_kernels.py [--repeat 3]

The first numba call per kernel includes compilation, so it is warmed up
before timing.  Results from both backends are also compared for equality.
"""

import argparse
import time

import numpy as np

from parkideal import _kernels
from parkideal.graph import Graph, connected_graphs, tu_weighted_count
from parkideal.monomials import parking_ideal, skeleton_ideal
from parkideal.standard import count_standard, inversion_polynomial, u_parking_count


def workloads():
    k6 = Graph.complete(6)
    k7 = Graph.complete(7)
    graphs6 = list(connected_graphs(6))[::50]
    rows = np.random.default_rng(0).integers(-5, 6, size=(120, 120)).tolist()
    return {
        "standard mask, M_6^(1)": lambda: count_standard(skeleton_ideal(k7, 1)),
        "standard mask, M_5": lambda: count_standard(parking_ideal(k6)),
        "TU sweep, 6-vertex sample": lambda: [tu_weighted_count(g) for g in graphs6],
        "rooted forests, n=6": lambda: inversion_polynomial(6).coeffs,
        "u-parking, (4,0,0,0,1,1)": lambda: u_parking_count((4, 0, 0, 0, 1, 1)),
        "rank mod p, 120x120": lambda: _kernels.rank_mod_p(np.array(rows, dtype=np.int64), 32003),
    }


def best_of(func, repeat):
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        out = func()
        best = min(best, time.perf_counter() - start)
    return best, out


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()
    if not _kernels.HAVE_NUMBA:
        raise SystemExit("numba is not installed; nothing to compare")
    print(f"{'workload':32s} {'numba s':>9s} {'numpy s':>9s} {'speedup':>8s}  same")
    previous = _kernels.get_backend()
    try:
        for name, func in workloads().items():
            _kernels.set_backend("numba")
            func()  # compile
            t_nb, out_nb = best_of(func, args.repeat)
            _kernels.set_backend("numpy")
            t_np, out_np = best_of(func, args.repeat)
            same = out_nb == out_np
            print(f"{name:32s} {t_nb:9.4f} {t_np:9.4f} {t_np / t_nb:8.1f}x  {same}")
    finally:
        _kernels.set_backend(previous)


if __name__ == "__main__":
    main()
