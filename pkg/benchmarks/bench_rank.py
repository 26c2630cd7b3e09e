"""Benchmark the GF(p) rank kernel: numba backend vs numpy fallback.

Matrices mimic simplicial boundary matrices: entries in {-1, 0, 1} at a
given density.  Both backends must agree on every rank; disagreement aborts.
--end-to-end additionally times a full Betti-table run in two subprocesses,
one per backend, since backend selection is once per process.
"""
import argparse
import os
import subprocess
import sys
import time

import numpy as np

from edgeideal._kernels import rank_mod_p_numpy


def make_matrix(rng, m, n, density):
    a = np.zeros((m, n), dtype=np.int64)
    mask = rng.random((m, n)) < density
    a[mask] = rng.choice((-1, 1), size=int(mask.sum()))
    return a


def time_backend(impl, mats, p, repeats):
    best = float("inf")
    ranks = None
    for _ in range(repeats):
        t0 = time.perf_counter()
        ranks = [int(impl(a.copy(), p)) for a in mats]
        best = min(best, time.perf_counter() - t0)
    return best, ranks


def bench_kernels(args):
    rng = np.random.default_rng(args.seed)
    try:
        from edgeideal._kernels import _numba_kernel
        numba_impl = _numba_kernel()
    except ImportError:
        print("numba not importable; nothing to compare")
        return 1
    print(f"{'size':>10} {'numba':>10} {'numpy':>10} {'speedup':>8}")
    for size in args.sizes:
        mats = [make_matrix(rng, size, size, args.density)
                for _ in range(args.count)]
        numba_impl(mats[0].copy(), args.prime)  # warm the JIT outside timing
        t_nb, r_nb = time_backend(numba_impl, mats, args.prime, args.repeats)
        t_np, r_np = time_backend(rank_mod_p_numpy, mats, args.prime, args.repeats)
        if r_nb != r_np:
            print(f"rank mismatch at size {size}: {r_nb} vs {r_np}")
            return 1
        print(f"{size:>10} {t_nb:>9.4f}s {t_np:>9.4f}s {t_np / t_nb:>7.1f}x")
    return 0


END_TO_END = r"""
import json, time
from importlib import resources
from edgeideal.graphs import parse_graph
from edgeideal.ideals import edge_ideal_of_graph
from edgeideal.homology import betti_table
from edgeideal._kernels import backend_name
g = parse_graph(json.loads(resources.files("edgeideal.data").joinpath("cm7.json").read_text()))
ideal = edge_ideal_of_graph(g)
t0 = time.perf_counter()
table = betti_table(ideal, field="p:32003", cap=None)
dt = time.perf_counter() - t0
print(f"{backend_name():>6}  betti {table.regularity()},{table.projdim()},{table.depth()}  {dt:.2f}s")
"""


def bench_end_to_end():
    sys.stdout.flush()
    for flag in ("0", "1"):
        env = dict(os.environ, EDGEIDEAL_NO_NUMBA=flag)
        code = subprocess.call([sys.executable, "-c", END_TO_END], env=env)
        if code != 0:
            return code
    return 0


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sizes", type=int, nargs="+", default=[50, 100, 200, 400])
    ap.add_argument("--count", type=int, default=5, help="matrices per size")
    ap.add_argument("--repeats", type=int, default=3, help="best-of timing")
    ap.add_argument("--density", type=float, default=0.08)
    ap.add_argument("--prime", type=int, default=32003)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--end-to-end", action="store_true",
                    help="also time a 14-variable Betti table per backend")
    args = ap.parse_args(argv)
    code = bench_kernels(args)
    if code == 0 and args.end_to_end:
        code = bench_end_to_end()
    return code


if __name__ == "__main__":
    sys.exit(main())
