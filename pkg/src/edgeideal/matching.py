"""Perfect matchings and the directed-graph reduction of a bipartite graph.

A perfect matching lets us relabel so matched pairs sit on the diagonal; the
off-diagonal edges then define a digraph on {0, ..., c-1} whose order theory
carries the homological invariants.  Arc (i, j) records the edge x_i y_j.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass

from .digraph import (
    DirectedGraph,
    antichains,
    condensation,
    is_acyclic,
    is_transitively_closed,
    reachability,
)
from .errors import InvariantViolationError, NotUnmixedError
from .graphs import BipartiteGraph

INF = float("inf")


@dataclass(frozen=True)
class MatchedBipartiteGraph:
    c: int
    edges: frozenset  # of (i, j): edge between left i and (rematched) right j
    left_labels: tuple  # original label of x_{i+1}
    right_labels: tuple  # original label of y_{j+1} after rematching

    def __post_init__(self):
        for i in range(self.c):
            if (i, i) not in self.edges:
                raise InvariantViolationError("diagonal-matching", f"pair {i} missing")

    def digraph(self) -> DirectedGraph:
        return DirectedGraph(self.c, frozenset((i, j) for i, j in self.edges if i != j))

    def to_bipartite_graph(self) -> BipartiteGraph:
        return BipartiteGraph.from_label_edges(
            (self.left_labels[i], self.right_labels[j]) for i, j in self.edges
        )

    @staticmethod
    def from_digraph(d: DirectedGraph, left_labels=None, right_labels=None):
        c = d.n
        if left_labels is None:
            left_labels = tuple(f"x{i + 1}" for i in range(c))
        if right_labels is None:
            right_labels = tuple(f"y{i + 1}" for i in range(c))
        edges = frozenset((i, i) for i in range(c)) | d.arcs
        return MatchedBipartiteGraph(c, edges, tuple(left_labels), tuple(right_labels))


def find_perfect_matching(g: BipartiteGraph):
    """Hopcroft-Karp.  Returns a MatchedBipartiteGraph with the matching on
    the diagonal, or None when no perfect matching exists (not an error).
    Deterministic: vertices are processed in sorted-label order."""
    if g.n_left != g.n_right:
        return None
    n = g.n_left
    adj = [g.left_neighbors(u) for u in range(n)]
    match_l = [-1] * n
    match_r = [-1] * n
    dist = [INF] * n

    def bfs():
        queue = []
        for u in range(n):
            if match_l[u] == -1:
                dist[u] = 0
                queue.append(u)
            else:
                dist[u] = INF
        found = False
        qi = 0
        while qi < len(queue):
            u = queue[qi]
            qi += 1
            for v in adj[u]:
                w = match_r[v]
                if w == -1:
                    found = True
                elif dist[w] == INF:
                    dist[w] = dist[u] + 1
                    queue.append(w)
        return found

    def dfs(u):
        for v in adj[u]:
            w = match_r[v]
            if w == -1 or (dist[w] == dist[u] + 1 and dfs(w)):
                match_l[u] = v
                match_r[v] = u
                return True
        dist[u] = INF
        return False

    matched = 0
    while bfs():
        for u in range(n):
            if match_l[u] == -1 and dfs(u):
                matched += 1
    if matched != n:
        return None
    # re-index the right side so pair k is (left k, right k)
    inv = [0] * n
    for k in range(n):
        inv[match_l[k]] = k
    edges = frozenset((l, inv[r]) for l, r in g.edges)
    right_labels = tuple(g.right[match_l[k]] for k in range(n))
    return MatchedBipartiteGraph(n, edges, g.left, right_labels)


def build_digraph(g: BipartiteGraph) -> DirectedGraph:
    mg = find_perfect_matching(g)
    if mg is None:
        raise NotUnmixedError("graph has no perfect matching")
    return mg.digraph()


class Classification(enum.Enum):
    NO_PERFECT_MATCHING = "NoPerfectMatching"
    PERFECTLY_MATCHED_ONLY = "PerfectlyMatchedOnly"
    UNMIXED = "Unmixed"
    COHEN_MACAULAY = "CohenMacaulay"


def classify(g: BipartiteGraph) -> Classification:
    """Unmixed iff a perfect matching exists and the digraph is transitively
    closed; Cohen-Macaulay iff additionally acyclic.  The digraph from any
    perfect matching serves: the closure property does not depend on which
    matching is chosen."""
    mg = find_perfect_matching(g)
    if mg is None:
        return Classification.NO_PERFECT_MATCHING
    d = mg.digraph()
    if not is_transitively_closed(d):
        return Classification.PERFECTLY_MATCHED_ONLY
    if is_acyclic(d):
        return Classification.COHEN_MACAULAY
    return Classification.UNMIXED


def require_unmixed(g: BipartiteGraph) -> MatchedBipartiteGraph:
    mg = find_perfect_matching(g)
    if mg is None:
        raise NotUnmixedError("graph has no perfect matching")
    if not is_transitively_closed(mg.digraph()):
        raise NotUnmixedError("matching digraph is not transitively closed")
    return mg


@dataclass(frozen=True)
class AcyclicReduction:
    components: tuple  # strong components of the source, topological order
    zeta: tuple  # component sizes (weights)
    quotient: DirectedGraph

    @property
    def t(self):
        return len(self.components)

    def weighted_degree(self, u_comps, v_comps=()):
        """Total source-vertex weight carried by a quotient multidegree."""
        return sum(self.zeta[a] for a in u_comps) + sum(self.zeta[a] for a in v_comps)

    def component_of(self, v):
        for a, comp in enumerate(self.components):
            if v in comp:
                return a
        raise KeyError(v)


def acyclic_reduction(d: DirectedGraph) -> AcyclicReduction:
    """Collapse strong components; quotient arcs follow paths, so the quotient
    is always acyclic and transitively closed."""
    comps, q = condensation(d)
    red = AcyclicReduction(tuple(comps), tuple(len(cmp) for cmp in comps), q)
    if not is_acyclic(q):
        raise InvariantViolationError("quotient-acyclic")
    if sum(red.zeta) != d.n:
        raise InvariantViolationError("zeta-sum", f"{red.zeta} vs n={d.n}")
    if is_transitively_closed(d) and not is_transitively_closed(q):
        raise InvariantViolationError("quotient-closed")
    return red


def reduced_graph(red: AcyclicReduction) -> MatchedBipartiteGraph:
    """The bipartite graph of the quotient digraph (one matched pair per
    strong component)."""
    return MatchedBipartiteGraph.from_digraph(red.quotient)


@dataclass(frozen=True)
class AssociatedPrime:
    x_labels: tuple  # original left labels, sorted
    y_labels: tuple  # original right labels, sorted

    def as_cover_pair(self):
        return (frozenset(self.x_labels), frozenset(self.y_labels))


def associated_primes(g: BipartiteGraph):
    """Associated primes of the edge ideal of an unmixed graph: one per
    antichain A of the quotient poset, generated by the y's over components
    above A and the x's elsewhere."""
    mg = require_unmixed(g)
    red = acyclic_reduction(mg.digraph())
    reach = reachability(red.quotient)
    primes = []
    for a_set in antichains(red.quotient):
        above = set(a_set)
        for b in range(red.t):
            if any(reach[a, b] for a in a_set):
                above.add(b)
        omega = set()
        for b in above:
            omega.update(red.components[b])
        xs = tuple(sorted(mg.left_labels[i] for i in range(mg.c) if i not in omega))
        ys = tuple(sorted(mg.right_labels[j] for j in omega))
        primes.append(AssociatedPrime(xs, ys))
    primes.sort(key=lambda p: (p.x_labels, p.y_labels))
    if len({p.as_cover_pair() for p in primes}) != len(primes):
        raise InvariantViolationError("primes-distinct")
    return primes
