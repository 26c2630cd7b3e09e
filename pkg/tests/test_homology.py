"""Betti tables against a naive dense-matrix homology oracle, plus the
duality identities used by the cross-check suites."""
import itertools
from fractions import Fraction

import pytest

from edgeideal.errors import NotCohenMacaulayError, TooLargeError
from edgeideal.generate import enumerate_unmixed, random_squarefree_ideal
from edgeideal.homology import (
    betti_table,
    dual_betti_relation_check,
    dual_betti_table_via_links,
    dual_shape_check,
    dual_shape_pairs,
    oracle_invariants,
    quotient_to_module_table,
    terai_check,
)
from edgeideal.ideals import edge_ideal, edge_ideal_of_graph, squarefree_ideal
from edgeideal.matching import require_unmixed


def naive_faces(nvars, gens, sigma):
    """All faces of the Stanley-Reisner complex restricted to sigma."""
    out = []
    members = sorted(sigma)
    for k in range(len(members) + 1):
        for combo in itertools.combinations(members, k):
            fs = frozenset(combo)
            if not any(g <= fs for g in gens):
                out.append(fs)
    return out


def naive_rank(rows):
    m = [list(map(Fraction, row)) for row in rows]
    if not m or not m[0]:
        return 0
    rank = 0
    ncols = len(m[0])
    for col in range(ncols):
        piv = next((r for r in range(rank, len(m)) if m[r][col]), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        inv = 1 / m[rank][col]
        m[rank] = [x * inv for x in m[rank]]
        for r in range(len(m)):
            if r != rank and m[r][col]:
                f = m[r][col]
                m[r] = [a - f * b for a, b in zip(m[r], m[rank])]
        rank += 1
    return rank


def naive_reduced_homology(faces):
    """dim of reduced homology per degree, from dense boundary matrices over
    the rationals.  Faces include the empty face; the void complex is []."""
    if not faces:
        return {}
    by_dim = {}
    for f in faces:
        by_dim.setdefault(len(f) - 1, []).append(f)
    for fs in by_dim.values():
        fs.sort(key=sorted)
    dims = {}
    maxd = max(by_dim)
    ranks = {}
    for d in range(0, maxd + 1):
        upper = by_dim.get(d, [])
        lower = by_dim.get(d - 1, [])
        pos = {f: k for k, f in enumerate(lower)}
        rows = []
        for f in upper:
            row = [0] * len(lower)
            verts = sorted(f)
            for k, v in enumerate(verts):
                sub = frozenset(verts[:k] + verts[k + 1:])
                row[pos[sub]] = (-1) ** k
            rows.append(row)
        # rank of the boundary map C_d -> C_{d-1}, matrix transposed is fine
        ranks[d] = naive_rank(rows)
    for d in range(-1, maxd + 1):
        dim_cd = len(by_dim.get(d, []))
        dims[d] = dim_cd - ranks.get(d, 0) - ranks.get(d + 1, 0)
    return {d: v for d, v in dims.items() if v}


def naive_betti(ideal):
    """Multigraded Betti numbers of R/I over the rationals by direct
    enumeration of every vertex subset."""
    n = ideal.n
    out = {}
    for bits in range(1 << n):
        sigma = frozenset(v for v in range(n) if (bits >> v) & 1)
        faces = naive_faces(n, ideal.gens, sigma)
        rh = naive_reduced_homology(faces)
        for d, dim in rh.items():
            l = len(sigma) - d - 1
            out[(l, sigma)] = dim
    out[(0, frozenset())] = 1
    return out


@pytest.mark.parametrize("seed", range(12))
def test_betti_table_matches_naive_oracle(seed):
    ideal = random_squarefree_ideal(2 + seed % 4, 1 + seed % 3, seed=seed)
    expected = naive_betti(ideal)
    got = betti_table(ideal, field="q").entry_map()
    assert got == expected
    assert betti_table(ideal, field="p:32003").entry_map() == expected


def test_betti_table_matches_naive_on_edge_ideals():
    for c in (1, 2):
        for mg in enumerate_unmixed(c):
            ideal = edge_ideal(mg)
            assert betti_table(ideal, field="q").entry_map() == naive_betti(ideal)


def test_k22_table(k22):
    t = betti_table(edge_ideal_of_graph(k22), field="q")
    assert t.graded() == {(0, 0): 1, (1, 2): 4, (2, 3): 4, (3, 4): 1}
    assert t.regularity() == 1
    assert t.projdim() == 3
    assert t.depth() == 1


def test_single_edge_and_single_variable():
    one_edge = squarefree_ideal(("x", "y"), [{0, 1}])
    t = betti_table(one_edge, field="q")
    assert t.graded() == {(0, 0): 1, (1, 2): 1}
    principal = squarefree_ideal(("x", "y"), [{0}])
    t2 = betti_table(principal, field="q")
    assert t2.graded() == {(0, 0): 1, (1, 1): 1}
    assert t2.regularity() == 0
    assert t2.depth() == 1


def test_oracle_invariants_golden(cm7, k22):
    assert oracle_invariants(edge_ideal_of_graph(k22)) == (1, 3, 1)
    assert oracle_invariants(edge_ideal_of_graph(cm7)) == (3, 7, 7)


def test_field_choice_agrees_on_randoms():
    for seed in range(10):
        ideal = random_squarefree_ideal(4 + seed % 4, 2 + seed % 3, seed=100 + seed)
        tq = betti_table(ideal, field="q").entries
        tp = betti_table(ideal, field="p:32003").entries
        assert tq == tp


def test_terai_and_dual_relation():
    for seed in range(25):
        ideal = random_squarefree_ideal(3 + seed % 5, 2 + seed % 4, seed=200 + seed)
        assert terai_check(ideal, field="q")
        assert dual_betti_relation_check(ideal, field="q")


def test_dual_table_routes_agree():
    # link-based dual module table equals the direct table of the dual ideal
    for seed in range(10):
        ideal = random_squarefree_ideal(3 + seed % 4, 2 + seed % 3, seed=300 + seed)
        from edgeideal.ideals import alexander_dual
        direct = quotient_to_module_table(betti_table(alexander_dual(ideal), field="q"))
        via_links = dual_betti_table_via_links(ideal, field="q")
        assert direct.entries == via_links.entries


def test_dual_shape_golden(cm7, k22):
    mg = require_unmixed(cm7)
    pairs = dual_shape_pairs(mg)
    # predicted multidegrees are pairwise distinct, one per (A, B) pair
    assert dual_shape_check(mg, field="q")
    assert len({(len(s.subset), s.sigma) for s in pairs}) == len(pairs)
    with pytest.raises(NotCohenMacaulayError):
        dual_shape_check(require_unmixed(k22), field="q")


def test_dual_betti_relation_check_needs_fitting_cap():
    ideal = random_squarefree_ideal(17, 3, seed=0)
    with pytest.raises(TooLargeError):
        betti_table(ideal, field="q")
