"""Compare the compiled crossing kernel against the pure fallback.

Runs the all-pairs crossing sweep that dominates the verification suites
at a few window sizes and reports the timings side by side.

    python3 benchmarks/bench_kernels.py [--radius N ...]
"""

from __future__ import annotations

import argparse
import time

from stripcluster import arcs as A
from stripcluster import kernels as K


def bench(radius: int, repeats: int = 3) -> dict:
    arcs = list(A.arcs_in_window(-radius, radius))
    enc = K.encode_arcs(arcs)
    out = {"radius": radius, "arcs": len(arcs)}

    if K.COMPILED:
        best = min(_time(lambda: K.cross_matrix(enc, enc)) for _ in range(repeats))
        out["compiled_s"] = best
    best = min(_time(lambda: K._py_cross_matrix(enc, enc)) for _ in range(repeats))
    out["fallback_s"] = best

    m1 = K._py_cross_matrix(enc, enc)
    if K.COMPILED:
        m2 = K.cross_matrix(enc, enc)
        assert (m1 == m2).all(), "kernel disagreement"
        out["speedup"] = out["fallback_s"] / out["compiled_s"]
    return out


def _time(fn) -> float:
    t0 = time.perf_counter()
    fn()
    return time.perf_counter() - t0


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--radius", type=int, nargs="*", default=[10, 20, 30])
    args = ap.parse_args()
    print(f"compiled kernel available: {K.COMPILED}")
    for r in args.radius:
        res = bench(r)
        line = f"radius {res['radius']:>3}  arcs {res['arcs']:>6}  fallback {res['fallback_s']*1e3:8.1f} ms"
        if K.COMPILED:
            line += f"  compiled {res['compiled_s']*1e3:8.1f} ms  speedup x{res['speedup']:.1f}"
        print(line)


if __name__ == "__main__":
    main()
