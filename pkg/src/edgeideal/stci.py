"""Synthesis of arithmetic-rank generator sets.

Pipeline for an unmixed graph with matching digraph d:
  1. keep the maximal acyclic transitively-closed subgraph of d (ascending
     arcs inside each strong component, all arcs across components);
  2. embed its poset in the plane (lifting an embedding of the quotient);
  3. linearize columns and rows, place one grid point per comparable pair,
     and wire each point to the right neighbour of the nearest point below
     it in its column;
  4. one generator per connected component of that grid graph, plus one
     generator per chain in a minimal chain cover of the removed arcs.

The resulting projdim-many polynomials generate the edge ideal up to
radical, with every edge monomial appearing exactly once.
"""
from __future__ import annotations

from dataclasses import dataclass

from .digraph import DirectedGraph, max_antichain, reachability, strong_components
from .embedding import PlaneEmbedding, canonicalize, embed_poset_2d, validate_embedding
from .errors import InvariantViolationError, NotTransitivelyClosedError
from .graphs import BipartiteGraph
from .invariants import projective_dimension
from .matching import MatchedBipartiteGraph, acyclic_reduction, require_unmixed


@dataclass(frozen=True)
class BreveData:
    source: DirectedGraph
    digraph: DirectedGraph  # the acyclic transitively closed subgraph
    removed: tuple  # arcs (u, v) of source minus subgraph, sorted
    components: tuple  # strong components of source, topological order


def breve_subgraph(d: DirectedGraph) -> BreveData:
    """Drop the descending half of every strong component.  Inside a
    component of a transitively closed digraph all arcs are present, so
    keeping the ascending ones leaves a transitive tournament; arcs across
    components survive unchanged."""
    from .digraph import is_acyclic, is_transitively_closed, missing_transitive_arc

    if not is_transitively_closed(d):
        raise NotTransitivelyClosedError(missing_transitive_arc(d))
    comps = strong_components(d)
    comp_of = {}
    for a, comp in enumerate(comps):
        for v in comp:
            comp_of[v] = a
    kept = set()
    removed = []
    for u, v in sorted(d.arcs):
        if comp_of[u] == comp_of[v] and u > v:
            removed.append((u, v))
        else:
            kept.add((u, v))
    breve = DirectedGraph.from_arcs(d.n, kept)
    if not is_acyclic(breve) or not is_transitively_closed(breve):
        raise InvariantViolationError("breve-poset")
    for u, v in removed:
        if (v, u) not in breve.arcs:  # re-adding (u, v) must close a cycle
            raise InvariantViolationError("breve-maximal", f"arc {(u, v)}")
    return BreveData(d, breve, tuple(removed), tuple(comps))


def lift_quotient_embedding(bd: BreveData, quotient_emb: PlaneEmbedding) -> PlaneEmbedding:
    """Refine an embedding of the component quotient to the full poset by
    spreading each component along a diagonal inside its grid cell."""
    n = bd.source.n
    phi = [None] * n
    for a, comp in enumerate(bd.components):
        pa, qa = quotient_emb.phi[a]
        for k, v in enumerate(comp):
            phi[v] = (pa * n + k, qa * n + k)
    emb = canonicalize(PlaneEmbedding(tuple(phi)))
    validate_embedding(bd.digraph, emb)
    return emb


def embed_breve(bd: BreveData, cap=None) -> PlaneEmbedding:
    red = acyclic_reduction(bd.source)
    kwargs = {} if cap is None else {"cap": cap}
    return lift_quotient_embedding(bd, embed_poset_2d(red.quotient, **kwargs))


def column_linearization(p: DirectedGraph, emb: PlaneEmbedding):
    """gamma[v] in 1..n: repeatedly extract the minimal element whose first
    coordinate is smallest.  Valid embeddings make the choice unique."""
    return _linearize(p, emb, minimal=True)


def row_linearization(p: DirectedGraph, emb: PlaneEmbedding):
    """rho[v] in 1..n: same extraction over maximal elements."""
    return _linearize(p, emb, minimal=False)


def _linearize(p, emb, minimal):
    validate_embedding(p, emb)
    reach = reachability(p)
    remaining = set(range(p.n))
    out = [0] * p.n
    for rank in range(1, p.n + 1):
        if minimal:
            pool = [v for v in remaining if not any(reach[w, v] for w in remaining if w != v)]
        else:
            pool = [v for v in remaining if not any(reach[v, w] for w in remaining if w != v)]
        v = min(pool, key=lambda u: emb.phi[u][0])
        out[v] = rank
        remaining.remove(v)
    return out


def check_linearizations(p: DirectedGraph, gamma, rho):
    """Order test for an induced pair: j strictly above i forces a later
    column and an earlier row; incomparable pairs agree in column and row
    order.  Raises on the first bad pair."""
    reach = reachability(p)
    for i in range(p.n):
        for j in range(p.n):
            if j == i:
                continue
            if reach[i, j]:
                ok = gamma[j] > gamma[i] and rho[j] < rho[i]
            elif not reach[j, i]:
                ok = (gamma[j] > gamma[i]) == (rho[j] > rho[i])
            else:
                continue
            if not ok:
                raise InvariantViolationError(
                    "linearization-order", f"pair ({i + 1},{j + 1})")


@dataclass(frozen=True)
class GammaGraph:
    n: int
    points: tuple  # of ((col, row), (i, j)) with col = gamma[i], row = rho[j]
    edges: tuple  # of ((col, row), (col, row)) pairs, each sorted
    components: tuple  # components[t-1] = points of C_t, sorted by column desc

    def point_map(self):
        return dict(self.points)


def build_gamma_graph(p: DirectedGraph, gamma, rho) -> GammaGraph:
    """Grid graph on the points (gamma[i], rho[j]) over comparable pairs
    j above-or-equal i.  Exactly n components come out, and component t is
    the one holding the leftmost point of row t; violations raise."""
    n = p.n
    reach = reachability(p)
    pts = {}
    for i in range(n):
        for j in range(n):
            if i == j or reach[i, j]:
                pts[(gamma[i], rho[j])] = (i, j)
    cols = {}
    rows = {}
    for (x, y) in pts:
        cols.setdefault(x, []).append(y)
        rows.setdefault(y, []).append(x)
    for v in cols.values():
        v.sort()
    for v in rows.values():
        v.sort()

    parent = {pt: pt for pt in pts}

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    edges = []
    for (x, y) in sorted(pts):
        below = [yy for yy in cols[x] if yy < y]
        if not below:
            continue
        ly = below[-1]
        right = [xx for xx in rows[ly] if xx > x]
        if not right:
            raise InvariantViolationError(
                "gamma-right-neighbour", f"point ({x},{ly}) has nothing to its right")
        other = (right[0], ly)
        edges.append(((x, y), other) if (x, y) < other else (other, (x, y)))
        ra, rb = find((x, y)), find(other)
        if ra != rb:
            parent[ra] = rb

    comp_members = {}
    for pt in pts:
        comp_members.setdefault(find(pt), []).append(pt)
    if len(comp_members) != n:
        raise InvariantViolationError(
            "gamma-component-count", f"{len(comp_members)} components for n={n}")

    components = []
    seen_roots = {}
    for t in range(1, n + 1):
        leftmost = (rows[t][0], t)
        root = find(leftmost)
        if root in seen_roots:
            raise InvariantViolationError(
                "gamma-row-component", f"rows {seen_roots[root]} and {t} share a component")
        seen_roots[root] = t
        components.append(tuple(sorted(comp_members[root], key=lambda pt: -pt[0])))

    col1 = cols[1]
    if col1 != list(range(1, len(col1) + 1)):
        raise InvariantViolationError("gamma-first-column", f"rows {col1} not an initial block")

    return GammaGraph(
        n=n,
        points=tuple(sorted(pts.items())),
        edges=tuple(sorted(edges)),
        components=tuple(components),
    )


def component_generators(gg: GammaGraph):
    """One generator per component: the sum of x_i y_j over its points,
    terms listed by decreasing column."""
    pmap = gg.point_map()
    return [tuple(pmap[pt] for pt in comp) for comp in gg.components]


@dataclass(frozen=True)
class ExtraEdgePoset:
    elements: tuple  # removed arcs (u, v), i.e. edge x_u y_v, sorted
    order: DirectedGraph  # arc a -> b iff element b strictly dominates a


def extra_edge_poset(bd: BreveData) -> ExtraEdgePoset:
    """Removed arcs ordered componentwise: (u, v) dominates (u', v') when u
    sits strictly above u' and v strictly above v' in the breve order."""
    reach = reachability(bd.digraph)
    elems = tuple(sorted(bd.removed))
    arcs = set()
    for a, (u1, v1) in enumerate(elems):
        for b, (u2, v2) in enumerate(elems):
            if a == b:
                continue
            if u1 != u2 and v1 != v2 and reach[u1, u2] and reach[v1, v2]:
                arcs.add((a, b))
    return ExtraEdgePoset(elems, DirectedGraph.from_arcs(len(elems), arcs))


def chain_cover(ep: ExtraEdgePoset):
    """Minimal chain cover of the extra-edge poset (Dilworth via bipartite
    matching on the comparability relation).  Chains come out top-first."""
    m = len(ep.elements)
    reach = reachability(ep.order)
    succ = [[b for b in range(m) if reach[a, b]] for a in range(m)]
    match_to = [-1] * m  # match_to[b] = a when chain steps a -> b

    def try_augment(a, seen):
        for b in succ[a]:
            if b in seen:
                continue
            seen.add(b)
            if match_to[b] == -1 or try_augment(match_to[b], seen):
                match_to[b] = a
                return True
        return False

    for a in range(m):
        try_augment(a, set())
    nxt = [-1] * m
    has_prev = [False] * m
    for b, a in enumerate(match_to):
        if a != -1:
            nxt[a] = b
            has_prev[b] = True
    chains = []
    for a in range(m):
        if has_prev[a]:
            continue
        chain = []
        cur = a
        while cur != -1:
            chain.append(cur)
            cur = nxt[cur]
        chains.append(tuple(reversed(chain)))  # top element first
    chains.sort(key=lambda ch: ch[-1])
    return chains


@dataclass(frozen=True)
class GeneratorSet:
    c: int
    xi: int
    gens_g: tuple  # component generators, each a tuple of (i, j) terms
    gens_h: tuple  # chain generators
    embedding: PlaneEmbedding = None
    gamma: tuple = None
    rho: tuple = None
    gamma_graph: GammaGraph = None
    chains: tuple = None

    @property
    def count(self):
        return len(self.gens_g) + len(self.gens_h)

    def all_terms(self):
        return [t for g in self.gens_g for t in g] + [t for h in self.gens_h for t in h]

    def strings(self):
        return [term_string(g) for g in self.gens_g] + [term_string(h) for h in self.gens_h]

    def to_json(self):
        out = {
            "schema": "v1",
            "c": self.c,
            "xi": self.xi,
            "count": self.count,
            "generators": self.strings(),
        }
        if self.embedding is not None:
            out["embedding"] = self.embedding.to_json()
        if self.gamma is not None:
            out["gamma"] = list(self.gamma)
            out["rho"] = list(self.rho)
        if self.gamma_graph is not None:
            out["gamma_points"] = [list(pt) for pt, _ in self.gamma_graph.points]
            out["gamma_edges"] = [[list(a), list(b)] for a, b in self.gamma_graph.edges]
            out["components"] = [[list(pt) for pt in comp]
                                 for comp in self.gamma_graph.components]
        if self.chains is not None:
            out["chains"] = [list(ch) for ch in self.chains]
        return out


def term_string(terms):
    return " + ".join(f"x{i + 1}*y{j + 1}" for i, j in terms)


def arank_generators(g, embedding: PlaneEmbedding = None, embed_cap=None) -> GeneratorSet:
    """Full synthesis for an unmixed bipartite graph (or a prebuilt
    MatchedBipartiteGraph).  `embedding` overrides the embedding search with
    a caller-supplied plane embedding of the breve poset."""
    mg = g if isinstance(g, MatchedBipartiteGraph) else require_unmixed(g)
    d = mg.digraph()
    bd = breve_subgraph(d)
    if embedding is None:
        emb = embed_breve(bd, cap=embed_cap)
    else:
        validate_embedding(bd.digraph, embedding)
        emb = embedding
    gamma = column_linearization(bd.digraph, emb)
    rho = row_linearization(bd.digraph, emb)
    gg = build_gamma_graph(bd.digraph, gamma, rho)
    gens_g = component_generators(gg)
    ep = extra_edge_poset(bd)
    xi = projective_dimension(d) - d.n
    anti, _ = max_antichain(ep.order)
    if anti != xi:
        raise InvariantViolationError("extra-edge-antichain", f"{anti} != xi {xi}")
    chains = chain_cover(ep)
    if len(chains) != xi:
        raise InvariantViolationError("chain-cover-size", f"{len(chains)} chains, xi {xi}")
    gens_h = tuple(tuple(ep.elements[a] for a in ch) for ch in chains)
    gs = GeneratorSet(
        c=d.n,
        xi=xi,
        gens_g=tuple(gens_g),
        gens_h=gens_h,
        embedding=emb,
        gamma=tuple(gamma),
        rho=tuple(rho),
        gamma_graph=gg,
        chains=tuple(chains),
    )
    if gs.count != projective_dimension(d):
        raise InvariantViolationError("generator-count", f"{gs.count} != projdim")
    terms = gs.all_terms()
    if sorted(terms) != sorted(mg.edges):
        raise InvariantViolationError("edge-partition", "terms do not partition the edges")
    return gs


def render_gamma(gg: GammaGraph) -> str:
    """Text picture: rows top-down, points labelled by component index
    (C_10 and up wrap around to 0)."""
    comp_of = {}
    for t, comp in enumerate(gg.components, start=1):
        for pt in comp:
            comp_of[pt] = t
    lines = []
    for y in range(gg.n, 0, -1):
        cells = []
        for x in range(1, gg.n + 1):
            t = comp_of.get((x, y))
            cells.append(str(t % 10) if t is not None else ".")
        lines.append(f"row {y:2d}  " + " ".join(cells))
    lines.append("        " + " ".join(str(x % 10) for x in range(1, gg.n + 1)))
    return "\n".join(lines)
