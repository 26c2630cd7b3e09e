"""Directed graphs on vertex set {0, ..., n-1} and the order-theoretic
primitives built on reachability: strong components, antichains, cocliques.

All functions are deterministic; witnesses are lexicographically smallest
among optimal ones (as sorted vertex tuples).
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import InvariantViolationError, NotAPosetError


@dataclass(frozen=True)
class DirectedGraph:
    n: int
    arcs: frozenset  # of (u, v) pairs, u != v, meaning an arc u -> v

    def __post_init__(self):
        for u, v in self.arcs:
            if u == v or not (0 <= u < self.n) or not (0 <= v < self.n):
                raise ValueError(f"bad arc ({u}, {v}) for n={self.n}")

    @staticmethod
    def from_arcs(n, arcs):
        return DirectedGraph(n, frozenset((int(u), int(v)) for u, v in arcs))

    def adjacency(self):
        a = np.zeros((self.n, self.n), dtype=bool)
        for u, v in self.arcs:
            a[u, v] = True
        return a

    def sorted_arcs(self):
        return sorted(self.arcs)


@lru_cache(maxsize=4096)
def reachability(d: DirectedGraph):
    """Boolean matrix r with r[u, v] true iff a directed path u -> v exists
    (length >= 1).  Repeated squaring of the adjacency matrix."""
    if d.n == 0:
        return np.zeros((0, 0), dtype=bool)
    r = d.adjacency()
    while True:
        nxt = r | (r @ r)
        if (nxt == r).all():
            r.setflags(write=False)
            return r
        r = nxt


def reach_masks(d: DirectedGraph):
    """Per-vertex bitmask of vertices reachable by a path of length >= 1."""
    r = reachability(d)
    out = []
    for u in range(d.n):
        m = 0
        for v in np.flatnonzero(r[u]):
            m |= 1 << int(v)
        out.append(m)
    return out


def is_acyclic(d: DirectedGraph) -> bool:
    r = reachability(d)
    return not bool(np.diagonal(r).any()) if d.n else True


def is_transitively_closed(d: DirectedGraph) -> bool:
    """Whether arcs u->v, v->w with u != w always imply the arc u->w."""
    a = d.adjacency()
    two = a @ a
    if d.n:
        np.fill_diagonal(two, False)
    return not bool((two & ~a).any())


def missing_transitive_arc(d: DirectedGraph):
    """Some (u, w) witnessing failure of transitive closure, or None."""
    a = d.adjacency()
    two = a @ a
    if d.n:
        np.fill_diagonal(two, False)
    bad = two & ~a
    idx = np.argwhere(bad)
    if len(idx) == 0:
        return None
    u, w = min((int(i), int(j)) for i, j in idx)
    return (u, w)


def transitive_closure(d: DirectedGraph) -> DirectedGraph:
    r = reachability(d)
    arcs = [(int(u), int(v)) for u, v in np.argwhere(r) if u != v]
    return DirectedGraph.from_arcs(d.n, arcs)


def require_poset(d: DirectedGraph):
    if not is_acyclic(d):
        raise NotAPosetError("digraph has a directed cycle")
    if not is_transitively_closed(d):
        raise NotAPosetError(f"digraph is not transitively closed at {missing_transitive_arc(d)}")


def strong_components(d: DirectedGraph):
    """Strongly connected components as sorted tuples, listed in topological
    order of the condensation; incomparable components are ordered by their
    smallest member."""
    n = d.n
    adj = [[] for _ in range(n)]
    for u, v in sorted(d.arcs):
        adj[u].append(v)

    # Tarjan, iterative to dodge recursion limits on long chains.
    index = [0] * n
    low = [0] * n
    on_stack = [False] * n
    visited = [False] * n
    stack = []
    comps = []
    counter = [1]

    for root in range(n):
        if visited[root]:
            continue
        work = [(root, 0)]
        while work:
            v, pi = work[-1]
            if pi == 0:
                visited[v] = True
                index[v] = low[v] = counter[0]
                counter[0] += 1
                stack.append(v)
                on_stack[v] = True
            advanced = False
            while pi < len(adj[v]):
                w = adj[v][pi]
                pi += 1
                if not visited[w]:
                    work[-1] = (v, pi)
                    work.append((w, 0))
                    advanced = True
                    break
                if on_stack[w]:
                    low[v] = min(low[v], index[w])
            if advanced:
                continue
            work.pop()
            if low[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    comp.append(w)
                    if w == v:
                        break
                comps.append(tuple(sorted(comp)))
            if work:
                u, _ = work[-1]
                low[u] = min(low[u], low[v])

    # Topological order with min-member tie break (Kahn over the condensation).
    t = len(comps)
    comp_of = {}
    for a, comp in enumerate(comps):
        for v in comp:
            comp_of[v] = a
    succ = [set() for _ in range(t)]
    indeg = [0] * t
    for u, v in d.arcs:
        a, b = comp_of[u], comp_of[v]
        if a != b and b not in succ[a]:
            succ[a].add(b)
            indeg[b] += 1
    import heapq

    heap = [(comps[a][0], a) for a in range(t) if indeg[a] == 0]
    heapq.heapify(heap)
    order = []
    while heap:
        _, a = heapq.heappop(heap)
        order.append(a)
        for b in sorted(succ[a]):
            indeg[b] -= 1
            if indeg[b] == 0:
                heapq.heappush(heap, (comps[b][0], b))
    if len(order) != t:
        raise InvariantViolationError("condensation-acyclic", "Kahn did not exhaust components")
    return [comps[a] for a in order]


def condensation(d: DirectedGraph):
    """(components, quotient) where quotient has an arc a -> b iff some vertex
    of component a reaches some vertex of component b.  Path-based, so the
    quotient is always transitively closed."""
    comps = strong_components(d)
    comp_of = {}
    for a, comp in enumerate(comps):
        for v in comp:
            comp_of[v] = a
    r = reachability(d)
    t = len(comps)
    arcs = set()
    for u, v in np.argwhere(r):
        a, b = comp_of[int(u)], comp_of[int(v)]
        if a != b:
            arcs.add((a, b))
    return comps, DirectedGraph.from_arcs(t, arcs)


# ---- independent sets over bitmask adjacency ----

def maximal_independent_sets(nbr, n):
    """All maximal independent sets of the undirected graph given by bitmask
    adjacency, via Bron-Kerbosch with pivoting on the complement."""
    full = (1 << n) - 1
    # non-neighbours, excluding self: candidates that stay independent
    co = [full & ~nbr[v] & ~(1 << v) for v in range(n)]
    out = []

    def expand(r, p, x):
        if p == 0 and x == 0:
            out.append(r)
            return
        # pivot: vertex of p|x with most candidates knocked out
        px = p | x
        pivot, best = -1, -1
        m = px
        while m:
            v = (m & -m).bit_length() - 1
            m &= m - 1
            k = bin(p & ~co[v]).count("1")
            if k > best:
                best, pivot = k, v
        cand = p & ~co[pivot]
        while cand:
            v = (cand & -cand).bit_length() - 1
            cand &= cand - 1
            expand(r | (1 << v), p & co[v], x & co[v])
            p &= ~(1 << v)
            x |= 1 << v

    expand(0, full, 0)
    return out


def _exists_independent(nbr, cand, need):
    """Whether an independent set of size `need` exists inside mask `cand`."""
    if need <= 0:
        return True
    if bin(cand).count("1") < need:
        return False
    v = (cand & -cand).bit_length() - 1
    take = cand & ~nbr[v] & ~(1 << v)
    if _exists_independent(nbr, take, need - 1):
        return True
    return _exists_independent(nbr, cand & ~(1 << v), need)


def max_independent_set(nbr, n):
    """(size, witness) with witness the lexicographically smallest maximum
    independent set, as a sorted tuple."""
    if n == 0:
        return 0, ()
    best = max(bin(m).count("1") for m in maximal_independent_sets(nbr, n))
    chosen = 0
    cand = (1 << n) - 1
    remaining = best
    for v in range(n):
        if not (cand >> v) & 1:
            continue
        take = cand & ~nbr[v] & ~(1 << v)
        if _exists_independent(nbr, take, remaining - 1):
            chosen |= 1 << v
            cand = take
            remaining -= 1
            if remaining == 0:
                break
    witness = tuple(v for v in range(n) if (chosen >> v) & 1)
    if len(witness) != best:
        raise InvariantViolationError("mis-witness", f"forced {len(witness)} < {best}")
    return best, witness


def comparability_masks(d: DirectedGraph):
    """Bitmask adjacency of the comparability graph: u ~ v iff some directed
    path joins them (either direction)."""
    r = reachability(d)
    sym = r | r.T
    return [int.from_bytes(np.packbits(sym[v], bitorder="little").tobytes(), "little")
            for v in range(d.n)]


def underlying_masks(d: DirectedGraph):
    """Bitmask adjacency of the underlying undirected graph (arcs only)."""
    a = d.adjacency()
    sym = a | a.T
    return [int.from_bytes(np.packbits(sym[v], bitorder="little").tobytes(), "little")
            for v in range(d.n)]


def max_antichain(d: DirectedGraph):
    """Largest set of vertices with no directed path between any two,
    returned as (size, lexicographically smallest witness)."""
    return max_independent_set(comparability_masks(d), d.n)


def antichains(d: DirectedGraph):
    """All antichains of d (the empty one included), as sorted tuples."""
    masks = comparability_masks(d)
    out = []

    def rec(start, cur, members):
        out.append(tuple(members))
        for v in range(start, d.n):
            if not (cur >> v) & 1:
                members.append(v)
                rec(v + 1, cur | masks[v] | (1 << v), members)
                members.pop()

    rec(0, 0, [])
    return out
