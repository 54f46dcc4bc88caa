"""Compare the compiled and pure-Python search kernels.

    python3 benchmarks/bench_search.py [--repeat N] [--quick]

Both kernels explore the same tree, so node counts must match; the table
reports wall time per exact solve and the speedup.
"""

import argparse
import statistics
import sys
import time

from linarb import search
from linarb.exact import exact_la_k
from linarb.expr import build, parse_expr

CASES = [
    ("petersen", 1),
    ("complete:8", 2),
    ("lexicographic(path:3,path:3)", 2),
    ("strong(path:3,cycle:4)", 2),
    ("lexicographic(path:4,path:3)", 3),
]


def timed(g, k, kernel, repeat):
    times, result = [], None
    for _ in range(repeat):
        start = time.perf_counter()
        result = exact_la_k(g, k, kernel=kernel)
        times.append(time.perf_counter() - start)
    return statistics.median(times), result


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--quick", action="store_true", help="skip the slowest case")
    args = ap.parse_args(argv)
    if search.compiled_search is None:
        print("compiled kernel not available; build with `pip install -e . --no-build-isolation`")
        return 1
    cases = CASES[:-1] if args.quick else CASES
    print(f"{'instance':32} {'k':>2} {'value':>5} {'nodes':>10} {'cython s':>10} {'python s':>10} {'speedup':>8}")
    for expr, k in cases:
        g = build(parse_expr(expr))
        tc, rc = timed(g, k, search.compiled_search, args.repeat)
        tp, rp = timed(g, k, search.python_search, 1 if expr.startswith("lexico") else args.repeat)
        if (rc.value, rc.stats.nodes) != (rp.value, rp.stats.nodes):
            print(f"kernels disagree on {expr}: {rc.value}/{rc.stats.nodes} vs {rp.value}/{rp.stats.nodes}")
            return 2
        print(f"{expr:32} {k:>2} {rc.value:>5} {rc.stats.nodes:>10} {tc:>10.4f} {tp:>10.4f} {tp / max(tc, 1e-9):>7.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
