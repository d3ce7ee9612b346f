"""Compare the pure-Python and compiled kernel backends.

Times each entry point on a representative workload and prints a small
table. Run from the repository root:

    python3 benchmarks/bench_backends.py --repeats 5
"""

from __future__ import annotations

import argparse
import random
import time

from doptsnf.designs import build_example_26, build_example_66
from doptsnf.kernels import available_backends


def _best(fn, repeats):
    best = None
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        dt = time.perf_counter() - t0
        if best is None or dt < best:
            best = dt
    return best


def build_workloads(rng: random.Random):
    """Name -> (callable-factory taking a backend module, result fingerprint)."""
    e26 = build_example_26().to_rows()
    e66 = build_example_66().to_rows()
    dense = [[rng.randrange(-99, 100) for _ in range(40)] for _ in range(40)]
    wide = [[rng.randrange(-9, 10) for _ in range(30)] for _ in range(24)]
    gf = [[rng.randrange(0, 11) for _ in range(160)] for _ in range(160)]
    rows = [[rng.choice((1, -1)) for _ in range(64)] for _ in range(400)]

    return {
        "matmul 40x40": lambda mod: mod.matmul(dense, dense),
        "bareiss det 40x40": lambda mod: mod.bareiss_determinant(dense),
        "adjugate order 26": lambda mod: mod.adjugate(e26),
        "smith order 26": lambda mod: mod.smith_reduce(e26, False),
        "smith order 66": lambda mod: mod.smith_reduce(e66, False),
        "smith 24x30 + transforms": lambda mod: mod.smith_reduce(wide, True),
        "gf_rank 160x160 mod 11": lambda mod: mod.gf_rank(gf, 11),
        "autocorr 400 rows of 64": lambda mod: [mod.autocorrelations(r) for r in rows],
    }


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeats", type=int, default=3, help="take the best of N runs")
    parser.add_argument("--seed", type=int, default=20260814)
    args = parser.parse_args()

    backends = available_backends()
    if "compiled" not in backends:
        print("note: compiled backend not built; timing pure Python only")
    workloads = build_workloads(random.Random(args.seed))

    name_w = max(len(n) for n in workloads)
    cols = "".join(f"{name:>14}" for name in backends)
    print(f"{'workload':<{name_w}}{cols}{'speedup':>10}")
    for wname, fn in workloads.items():
        times = {}
        results = {}
        for bname, mod in backends.items():
            times[bname] = _best(lambda m=mod: results.__setitem__(bname, fn(m)), args.repeats)
        first, *rest = results.values()
        for other in rest:
            assert other == first, f"backend disagreement on {wname}"
        cells = "".join(f"{times[b] * 1000:>12.2f}ms" for b in backends)
        if "compiled" in times and times["compiled"] > 0:
            ratio = f"{times['python'] / times['compiled']:>9.1f}x"
        else:
            ratio = f"{'-':>10}"
        print(f"{wname:<{name_w}}{cells}{ratio}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
