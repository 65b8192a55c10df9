"""Compiled vs pure-Python exact kernels.

Run with ``python benchmarks/bench_kernel.py``.  Each kernel is timed on the
same seeded rational matrices and the outputs are compared for equality; an
end-to-end timing runs a prolongation and an irreducibility search in a
subprocess per kernel.
"""

from __future__ import annotations

import argparse
import os
import random
import subprocess
import sys
import timeit
from fractions import Fraction

from homlie import _pykernel

try:
    from homlie import _ckernel
except ImportError:
    _ckernel = None


def random_rows(rng, rows, cols, rank):
    """``rows x cols`` rational matrix of the given rank with small entries."""
    basis = [[Fraction(rng.randint(-5, 5), rng.randint(1, 4)) for _ in range(cols)] for _ in range(rank)]
    out = []
    for _ in range(rows):
        coeffs = [rng.randint(-3, 3) for _ in range(rank)]
        out.append([sum((c * b[j] for c, b in zip(coeffs, basis)), Fraction(0)) for j in range(cols)])
    return out


END_TO_END = """
import time
from homlie import corpus
from homlie.prolong import local_part_of, prolong_minimal
from homlie.grading import is_simple
t = time.perf_counter()
prolong_minimal(local_part_of(corpus.osp12()), 3, 5)
for g in corpus.corpus():
    is_simple(g, graded=False)
print(time.perf_counter() - t)
"""


def end_to_end(pure: bool) -> float:
    env = dict(os.environ)
    env.pop("HOMLIE_PURE_PYTHON", None)
    if pure:
        env["HOMLIE_PURE_PYTHON"] = "1"
    out = subprocess.run([sys.executable, "-c", END_TO_END], env=env, check=True,
                         capture_output=True, text=True)
    return float(out.stdout.strip())


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sizes", default="10,20,40,60")
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--seed", type=int, default=7)
    args = ap.parse_args(argv)
    if _ckernel is None:
        print("compiled kernel not built; nothing to compare")
        return 1
    rng = random.Random(args.seed)
    print(f"{'op':<8}{'n':>5}{'python s':>12}{'compiled s':>12}{'speedup':>9}  same")
    for n in (int(s) for s in args.sizes.split(",")):
        m = random_rows(rng, n, n, max(1, (3 * n) // 4))
        b = random_rows(rng, n, n, n)
        cases = [("rref", lambda k: k.rref(m, n)), ("matmul", lambda k: k.matmul(m, b, n, n))]
        for name, fn in cases:
            same = fn(_pykernel) == fn(_ckernel)
            tp = min(timeit.repeat(lambda: fn(_pykernel), number=1, repeat=args.repeat))
            tc = min(timeit.repeat(lambda: fn(_ckernel), number=1, repeat=args.repeat))
            print(f"{name:<8}{n:>5}{tp:>12.4f}{tc:>12.4f}{tp / tc:>8.2f}x  {same}")
    tp, tc = end_to_end(True), end_to_end(False)
    print(f"{'e2e':<8}{'':>5}{tp:>12.4f}{tc:>12.4f}{tp / tc:>8.2f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
