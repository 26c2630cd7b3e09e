"""Numeric kernels for boundary-matrix ranks.

Two backends exist for the dense mod-p elimination: a numba kernel and a
vectorized numpy fallback.  Selection happens once, lazily: the environment
flag EDGEIDEAL_NO_NUMBA=1 (or numba failing to import) picks the fallback.
Entries must satisfy p*p < 2**63 so products fit in int64.

Rational ranks use fraction-free sparse integer elimination with big ints;
that path is pure Python by necessity and by design (exactness first).
"""
from __future__ import annotations

import math
import os

import numpy as np

_rank_mod_p_impl = None


def _numba_kernel():
    import numba

    @numba.njit(cache=True)
    def rank_mod_p_nb(a, p):  # pragma: no cover - exercised via dispatch
        m, n = a.shape
        for i in range(m):
            for j in range(n):
                a[i, j] %= p
        r = 0
        for col in range(n):
            if r == m:
                break
            piv = -1
            for row in range(r, m):
                if a[row, col] != 0:
                    piv = row
                    break
            if piv == -1:
                continue
            if piv != r:
                for j in range(col, n):
                    tmp = a[r, j]
                    a[r, j] = a[piv, j]
                    a[piv, j] = tmp
            inv = 1
            base = a[r, col] % p
            e = p - 2
            while e:
                if e & 1:
                    inv = (inv * base) % p
                base = (base * base) % p
                e >>= 1
            for j in range(col, n):
                a[r, j] = (a[r, j] * inv) % p
            for row in range(m):
                if row != r and a[row, col] != 0:
                    f = a[row, col]
                    for j in range(col, n):
                        a[row, j] = (a[row, j] - f * a[r, j]) % p
            r += 1
        return r

    return rank_mod_p_nb


def rank_mod_p_numpy(a, p):
    """Row-reduce a copy of `a` over GF(p) and return the rank."""
    a = np.array(a, dtype=np.int64) % p
    m, n = a.shape
    r = 0
    for col in range(n):
        if r == m:
            break
        nz = np.flatnonzero(a[r:, col])
        if len(nz) == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            a[[r, piv]] = a[[piv, r]]
        inv = pow(int(a[r, col]), p - 2, p)
        a[r] = (a[r] * inv) % p
        rows = np.flatnonzero(a[:, col])
        rows = rows[rows != r]
        if len(rows):
            a[rows] = (a[rows] - np.outer(a[rows, col], a[r])) % p
        r += 1
    return r


def rank_mod_p(a, p) -> int:
    """Dense rank over GF(p); backend chosen once per process."""
    global _rank_mod_p_impl
    if _rank_mod_p_impl is None:
        if os.environ.get("EDGEIDEAL_NO_NUMBA", "") == "1":
            _rank_mod_p_impl = rank_mod_p_numpy
        else:
            try:
                _rank_mod_p_impl = _numba_kernel()
            except ImportError:
                _rank_mod_p_impl = rank_mod_p_numpy
    if a.size == 0:
        return 0
    return int(_rank_mod_p_impl(np.array(a, dtype=np.int64), p))


def backend_name() -> str:
    rank_mod_p(np.zeros((1, 1), dtype=np.int64), 3)  # force selection
    return "numpy" if _rank_mod_p_impl is rank_mod_p_numpy else "numba"


def rank_exact_sparse(cols) -> int:
    """Rank over the rationals of the integer matrix whose columns are given
    as {row: value} dicts.  Fraction-free elimination: rows stay integral,
    each update divides out the gcd, pivots are chosen Markowitz-style to
    limit fill."""
    rows = {}
    for ci, col in enumerate(cols):
        for ri, val in col.items():
            if val:
                rows.setdefault(ri, {})[ci] = val
    rows = {ri: row for ri, row in rows.items() if row}
    col_count = {}
    for row in rows.values():
        for ci in row:
            col_count[ci] = col_count.get(ci, 0) + 1
    rank = 0
    while rows:
        best = None
        for ri, row in rows.items():
            rlen = len(row)
            for ci, val in row.items():
                cost = (rlen - 1) * (col_count[ci] - 1)
                key = (cost, abs(val), ri, ci)
                if best is None or key < best[0]:
                    best = (key, ri, ci)
            if best[0][0] == 0:
                break
        _, pri, pci = best
        prow = rows.pop(pri)
        for ci in prow:
            col_count[ci] -= 1
        pval = prow[pci]
        touched = [ri for ri, row in rows.items() if pci in row]
        for ri in touched:
            row = rows[ri]
            f = row[pci]
            for ci in row:
                col_count[ci] -= 1
            new = {}
            for ci, val in row.items():
                if ci == pci:
                    continue
                new[ci] = val * pval - prow.get(ci, 0) * f
            for ci, pv in prow.items():
                if ci != pci and ci not in row:
                    new[ci] = -pv * f
            new = {ci: v for ci, v in new.items() if v}
            if new:
                g = 0
                for v in new.values():
                    g = math.gcd(g, v)
                if g > 1:
                    new = {ci: v // g for ci, v in new.items()}
                rows[ri] = new
                for ci in new:
                    col_count[ci] = col_count.get(ci, 0) + 1
            else:
                del rows[ri]
        rank += 1
    return rank
