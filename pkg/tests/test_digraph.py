"""Directed-graph primitives against brute force on small instances."""
import itertools

import numpy as np
import pytest

from edgeideal.digraph import (
    DirectedGraph,
    antichains,
    comparability_masks,
    condensation,
    is_acyclic,
    is_transitively_closed,
    max_antichain,
    max_independent_set,
    maximal_independent_sets,
    missing_transitive_arc,
    reachability,
    require_poset,
    strong_components,
    transitive_closure,
    underlying_masks,
)
from edgeideal.errors import NotAPosetError


def random_digraph(rng, n, density=0.3):
    arcs = [(i, j) for i in range(n) for j in range(n)
            if i != j and rng.random() < density]
    return DirectedGraph.from_arcs(n, arcs)


def brute_reach(d):
    n = d.n
    r = [[False] * n for _ in range(n)]
    for i, j in d.arcs:
        r[i][j] = True
    for k in range(n):
        for i in range(n):
            for j in range(n):
                r[i][j] = r[i][j] or (r[i][k] and r[k][j])
    return r


def test_reachability_matches_floyd_warshall():
    rng = np.random.default_rng(11)
    for _ in range(60):
        d = random_digraph(rng, int(rng.integers(1, 8)))
        reach = reachability(d)
        brute = brute_reach(d)
        for i in range(d.n):
            for j in range(d.n):
                assert bool(reach[i, j]) == brute[i][j]


def test_transitive_closure_is_minimal_and_idempotent():
    rng = np.random.default_rng(5)
    for _ in range(40):
        d = random_digraph(rng, int(rng.integers(1, 7)))
        c = transitive_closure(d)
        assert is_transitively_closed(c)
        assert d.arcs <= c.arcs
        assert transitive_closure(c) == c
        # every added arc is justified by a path in d
        brute = brute_reach(d)
        for i, j in c.arcs - d.arcs:
            assert brute[i][j]


def test_missing_transitive_arc_names_a_witness():
    d = DirectedGraph.from_arcs(3, [(0, 1), (1, 2)])
    assert not is_transitively_closed(d)
    assert missing_transitive_arc(d) == (0, 2)
    assert missing_transitive_arc(transitive_closure(d)) is None


def test_require_poset_rejects_cycles():
    with pytest.raises(NotAPosetError):
        require_poset(DirectedGraph.from_arcs(2, [(0, 1), (1, 0)]))
    require_poset(DirectedGraph.from_arcs(2, [(0, 1)]))


def test_strong_components_hand_cases():
    d = DirectedGraph.from_arcs(4, [(0, 1), (1, 0), (2, 3)])
    comps = strong_components(d)
    assert sorted(tuple(sorted(c)) for c in comps) == [(0, 1), (2,), (3,)]
    # topological: the (2,) component precedes (3,)
    order = {frozenset(c): k for k, c in enumerate(comps)}
    assert order[frozenset({2})] < order[frozenset({3})]


def test_strong_components_partition_and_mutual_reachability():
    rng = np.random.default_rng(3)
    for _ in range(50):
        d = random_digraph(rng, int(rng.integers(1, 8)), density=0.35)
        comps = strong_components(d)
        seen = sorted(v for c in comps for v in c)
        assert seen == list(range(d.n))
        reach = reachability(d)
        for comp in comps:
            for u in comp:
                for v in comp:
                    assert u == v or (reach[u, v] and reach[v, u])
        # across components, never mutually reachable
        comp_of = {v: k for k, c in enumerate(comps) for v in c}
        for u in range(d.n):
            for v in range(d.n):
                if comp_of[u] != comp_of[v]:
                    assert not (reach[u, v] and reach[v, u])


def test_condensation_is_closed_poset_and_mirrors_reachability():
    rng = np.random.default_rng(17)
    for _ in range(50):
        d = random_digraph(rng, int(rng.integers(1, 8)), density=0.4)
        comps, q = condensation(d)
        assert is_acyclic(q)
        assert is_transitively_closed(q)
        reach = reachability(d)
        comp_of = {v: k for k, c in enumerate(comps) for v in c}
        for u in range(d.n):
            for v in range(d.n):
                if comp_of[u] != comp_of[v]:
                    assert bool(reach[u, v]) == ((comp_of[u], comp_of[v]) in q.arcs)


def brute_independent_sets(nbr, n):
    out = []
    for bits in range(1 << n):
        if all(not (nbr[v] & bits) for v in range(n) if (bits >> v) & 1):
            out.append(bits)
    return out


def test_maximal_independent_sets_exhaustive():
    rng = np.random.default_rng(23)
    for _ in range(40):
        n = int(rng.integers(1, 9))
        d = random_digraph(rng, n, density=0.3)
        nbr = underlying_masks(d)
        all_ind = set(brute_independent_sets(nbr, n))
        maximal = {m for m in all_ind
                   if all((m | (1 << v)) not in all_ind
                          for v in range(n) if not (m >> v) & 1)}
        got = set(maximal_independent_sets(nbr, n))
        assert got == maximal


def test_max_independent_set_size_and_lex_witness():
    rng = np.random.default_rng(29)
    for _ in range(40):
        n = int(rng.integers(1, 9))
        d = random_digraph(rng, n, density=0.35)
        nbr = underlying_masks(d)
        size, witness = max_independent_set(nbr, n)
        best = max(bin(m).count("1") for m in brute_independent_sets(nbr, n))
        assert size == best
        assert len(witness) == size
        for u, v in itertools.combinations(witness, 2):
            assert not (nbr[u] >> v) & 1
        # lexicographically smallest among maximum witnesses
        candidates = sorted(
            tuple(v for v in range(n) if (m >> v) & 1)
            for m in brute_independent_sets(nbr, n)
            if bin(m).count("1") == best)
        assert witness == candidates[0]


def test_antichains_and_max_antichain():
    # diamond poset: 0 < 1, 0 < 2, 1 < 3, 2 < 3
    d = transitive_closure(DirectedGraph.from_arcs(4, [(0, 1), (0, 2), (1, 3), (2, 3)]))
    got = set(antichains(d))
    assert got == {(), (0,), (1,), (2,), (3,), (1, 2)}
    assert max_antichain(d) == (2, (1, 2))
    chain = transitive_closure(DirectedGraph.from_arcs(3, [(0, 1), (1, 2)]))
    assert max_antichain(chain) == (1, (0,))


def test_antichains_match_brute_force_on_random_posets():
    rng = np.random.default_rng(31)
    for _ in range(30):
        n = int(rng.integers(1, 8))
        arcs = [(i, j) for i in range(n) for j in range(i + 1, n)
                if rng.random() < 0.4]
        p = transitive_closure(DirectedGraph.from_arcs(n, arcs))
        reach = reachability(p)
        brute = set()
        for bits in range(1 << n):
            members = [v for v in range(n) if (bits >> v) & 1]
            if all(not (reach[u, v] or reach[v, u])
                   for u, v in itertools.combinations(members, 2)):
                brute.add(tuple(members))
        assert set(antichains(p)) == brute
        size, witness = max_antichain(p)
        assert size == max(len(a) for a in brute)
        assert witness in brute


def test_comparability_masks_symmetric():
    d = DirectedGraph.from_arcs(3, [(0, 1)])
    masks = comparability_masks(d)
    assert (masks[0] >> 1) & 1 and (masks[1] >> 0) & 1
    assert not (masks[0] >> 2) & 1 and not (masks[2] >> 0) & 1
