"""Compare the compiled kernels against the pure-Python fallback.

    python benchmarks/bench_kernels.py [--repeat 3]

Every case is run on both backends and the results are checked for equality
before timings are reported.
"""

import argparse
import random
import sys
import time

from cauchon import _kernels
from cauchon._kernels import _pykernels
from cauchon.diagram import enumerate_rows


def _best(fn, repeat: int) -> tuple[float, object]:
    best, out = float("inf"), None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


def cases():
    rng = random.Random(0)
    mats = [[[rng.randint(-1, 1) for _ in range(12)] for _ in range(12)] for _ in range(2000)]
    yield "rank: 2000 random 12x12 in {-1,0,1}", lambda k: [k.rank(a) for a in mats]

    rows44 = list(enumerate_rows(4, 4))
    yield "stratum dims: all 6902 4x4 diagrams", lambda k: [k.diagram_kernel_dim(r, 4) for r in rows44]

    yield "histogram: 4x4", lambda k: k.dim_histogram(4, 4)
    yield "histogram: 2x9", lambda k: k.dim_histogram(2, 9)
    yield "histogram: 5x4", lambda k: k.dim_histogram(5, 4)


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)

    ck = _kernels.compiled()
    if ck is None:
        print("compiled kernels are not built; nothing to compare", file=sys.stderr)
        return 1

    print(f"{'case':42s} {'python':>10s} {'cython':>10s} {'speedup':>8s}")
    for name, fn in cases():
        tp, rp = _best(lambda: fn(_pykernels), args.repeat)
        tc, rc = _best(lambda: fn(ck), args.repeat)
        if rp != rc:
            print(f"{name}: backends disagree", file=sys.stderr)
            return 1
        print(f"{name:42s} {tp:10.4f} {tc:10.4f} {tp / tc:7.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
