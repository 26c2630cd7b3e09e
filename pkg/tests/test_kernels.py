"""Rank kernels: GF(p) elimination (numba and numpy backends) and the
fraction-free sparse rational rank."""
import json
import os
import subprocess
import sys
from fractions import Fraction

import numpy as np

from edgeideal._kernels import (
    _numba_kernel,
    backend_name,
    rank_exact_sparse,
    rank_mod_p,
    rank_mod_p_numpy,
)


def naive_rank_fraction(a):
    rows = [[Fraction(int(v)) for v in row] for row in a]
    rank = 0
    ncols = len(rows[0]) if rows else 0
    for col in range(ncols):
        piv = next((i for i in range(rank, len(rows)) if rows[i][col]), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = 1 / rows[rank][col]
        rows[rank] = [v * inv for v in rows[rank]]
        for i in range(len(rows)):
            if i != rank and rows[i][col]:
                f = rows[i][col]
                rows[i] = [v - f * w for v, w in zip(rows[i], rows[rank])]
        rank += 1
    return rank


def random_matrix(rng, m, n, lo=-4, hi=5):
    return rng.integers(lo, hi, size=(m, n)).astype(np.int64)


def test_numpy_rank_matches_fraction_rank():
    rng = np.random.default_rng(5)
    for p in (2, 3, 32003):
        for _ in range(30):
            m, n = int(rng.integers(1, 8)), int(rng.integers(1, 8))
            # entries in {-1, 0, 1} so rank over GF(32003) == rank over Q
            a = rng.integers(-1, 2, size=(m, n)).astype(np.int64)
            got = rank_mod_p_numpy(a, p)
            if p > n * 2:
                assert got == naive_rank_fraction(a)
            assert 0 <= got <= min(m, n)


def test_known_ranks():
    a = np.array([[1, 2], [2, 4]], dtype=np.int64)
    assert rank_mod_p_numpy(a, 32003) == 1
    assert rank_mod_p_numpy(np.eye(4, dtype=np.int64), 7) == 4
    assert rank_mod_p_numpy(np.zeros((3, 5), dtype=np.int64), 7) == 0
    # rank depends on the field: det = 5
    b = np.array([[1, 2], [3, 11]], dtype=np.int64)
    assert rank_mod_p_numpy(b, 5) == 1
    assert rank_mod_p_numpy(b, 7) == 2


def test_numba_backend_agrees_with_numpy():
    try:
        kernel = _numba_kernel()
    except ImportError:
        import pytest

        pytest.skip("numba not installed")
    rng = np.random.default_rng(17)
    for _ in range(25):
        m, n = int(rng.integers(1, 10)), int(rng.integers(1, 10))
        a = random_matrix(rng, m, n)
        for p in (2, 101, 32003):
            assert kernel(np.array(a) % p, p) == rank_mod_p_numpy(a, p)


def test_dispatch_and_backend_name():
    name = backend_name()
    assert name in ("numba", "numpy")
    a = np.array([[1, 1], [1, 0], [0, 1]], dtype=np.int64)
    assert rank_mod_p(a, 32003) == 2
    assert rank_mod_p(np.zeros((0, 3), dtype=np.int64), 7) == 0


def test_env_flag_forces_numpy_backend():
    code = (
        "from edgeideal._kernels import backend_name; print(backend_name())"
    )
    env = dict(os.environ, EDGEIDEAL_NO_NUMBA="1")
    out = subprocess.run([sys.executable, "-c", code], env=env,
                         capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "numpy"


def test_sparse_exact_rank_matches_dense():
    rng = np.random.default_rng(23)
    for _ in range(40):
        m, n = int(rng.integers(1, 9)), int(rng.integers(1, 9))
        a = random_matrix(rng, m, n, lo=-3, hi=4)
        cols = []
        for j in range(n):
            cols.append({i: int(a[i, j]) for i in range(m) if a[i, j]})
        assert rank_exact_sparse(cols) == naive_rank_fraction(a)
    assert rank_exact_sparse([]) == 0
    assert rank_exact_sparse([{}, {}]) == 0
    assert rank_exact_sparse([{0: 2}, {0: 3}]) == 1


def test_sparse_rank_big_entries_stay_exact():
    # 2x2 with determinant 1 but huge entries; float elimination would drown
    big = 10**30
    cols = [{0: big, 1: big - 1}, {0: big + 1, 1: big}]
    assert rank_exact_sparse(cols) == 2
    cols_singular = [{0: big, 1: 2 * big}, {0: big + 1, 1: 2 * (big + 1)}]
    assert rank_exact_sparse(cols_singular) == 1
