"""Compare the compiled and pure-Python pivoting backends.

Two workloads:

* ``rref``: fraction-free Gauss-Jordan on random integer matrices, calling
  each backend's kernels directly in this process;
* ``suite``: the seminorm and cone computations on the standard pairs, run
  in a fresh interpreter per backend (``RELNORMS_PURE_PYTHON`` is read at
  import time).

Usage: ``python benchmarks/bench_kernels.py [--repeat N] [--size N]``
"""

import argparse
import os
import random
import subprocess
import sys
import time

from relnorms._kernels import backends

SUITE_SNIPPET = """
import time
from relnorms.cone import beta_inverse, build_cone, cone_l1_seminorm
from relnorms.complexes import homology_basis
from relnorms.families import suite_pairs
from relnorms.seminorm import duality_certificate
t = time.perf_counter()
for name, pair in suite_pairs().items():
    for n in range(3):
        for cls in homology_basis(pair, n):
            duality_certificate(pair, cls)
cone = build_cone(suite_pairs()["cylinder_grid6x2"])
for cls in homology_basis(cone.pair, 2):
    for w in (0, 1, 10):
        cone_l1_seminorm(cone, beta_inverse(cone, cls), w)
print(time.perf_counter() - t)
"""


def random_rows(rng, n, m):
    return [[rng.randint(-9, 9) if rng.random() < 0.4 else 0 for _ in range(m)] for _ in range(n)]


def gauss_jordan(mod, rows):
    r = 0
    for c in range(len(rows[0])):
        if r == len(rows):
            break
        i = mod.find_pivot_row(rows, c, r)
        if i < 0:
            continue
        rows[r], rows[i] = rows[i], rows[r]
        mod.eliminate(rows, r, c)
        r += 1
    return r


def bench_rref(mod, size, repeat):
    rng = random.Random(7)
    mats = [random_rows(rng, size, size + 5) for _ in range(repeat)]
    t = time.perf_counter()
    ranks = [gauss_jordan(mod, [row[:] for row in m]) for m in mats]
    return time.perf_counter() - t, ranks


def bench_suite(name):
    env = dict(os.environ)
    env.pop("RELNORMS_PURE_PYTHON", None)
    if name == "python":
        env["RELNORMS_PURE_PYTHON"] = "1"
    out = subprocess.run([sys.executable, "-c", SUITE_SNIPPET], env=env, check=True,
                         capture_output=True, text=True)
    return float(out.stdout.strip())


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=20)
    ap.add_argument("--size", type=int, default=40)
    args = ap.parse_args()
    found = backends()
    if "cython" not in found:
        print("compiled backend not built; timing the pure-Python backend only")
    print(f"{'backend':<8} {'rref (s)':>10} {'suite (s)':>10}")
    reference = None
    for name, mod in found.items():
        t_rref, ranks = bench_rref(mod, args.size, args.repeat)
        if reference is None:
            reference = ranks
        assert ranks == reference, "backends disagree"
        print(f"{name:<8} {t_rref:>10.3f} {bench_suite(name):>10.3f}")


if __name__ == "__main__":
    main()
