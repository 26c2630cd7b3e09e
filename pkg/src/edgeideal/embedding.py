"""Order embeddings of posets into the plane grid.

A poset embeds into N^2 with componentwise order exactly when its
incomparability graph has a transitive orientation O: the two linear
extensions P+O and P+reverse(O) supply the coordinates.  The search
propagates forcing rules and branches when stuck; failures surface the
incomparable pair whose orientation got forced both ways.
"""
from __future__ import annotations

from dataclasses import dataclass

from .digraph import DirectedGraph, reachability, require_poset
from .errors import (
    CoordinateTieError,
    InvalidEmbeddingError,
    InvariantViolationError,
    NotTwoDimensionalError,
    TooLargeError,
)

EMBED_CAP = 64


@dataclass(frozen=True)
class PlaneEmbedding:
    phi: tuple  # phi[v] = (a, b) grid coordinates of vertex v

    @property
    def n(self):
        return len(self.phi)

    def to_json(self):
        return {str(v + 1): list(self.phi[v]) for v in range(self.n)}

    @staticmethod
    def from_json(doc, n):
        phi = [None] * n
        for key, val in doc.items():
            v = int(key) - 1
            if not 0 <= v < n:
                raise InvalidEmbeddingError(key, f"vertex out of range 1..{n}")
            phi[v] = (int(val[0]), int(val[1]))
        if any(p is None for p in phi):
            missing = phi.index(None) + 1
            raise InvalidEmbeddingError(str(missing), "vertex missing from embedding")
        return PlaneEmbedding(tuple(phi))


def validate_embedding(p: DirectedGraph, emb: PlaneEmbedding):
    """Check order fidelity: j is above i in p exactly when phi(j) >= phi(i)
    componentwise, for every ordered pair.  Raises InvalidEmbeddingError."""
    require_poset(p)
    if emb.n != p.n:
        raise InvalidEmbeddingError((), f"embedding has {emb.n} points, poset has {p.n}")
    reach = reachability(p)
    for i in range(p.n):
        ai, bi = emb.phi[i]
        for j in range(p.n):
            if i == j:
                continue
            aj, bj = emb.phi[j]
            geq = aj >= ai and bj >= bi
            if bool(reach[i, j]) != geq:
                want = "comparable" if reach[i, j] else "incomparable"
                raise InvalidEmbeddingError((i + 1, j + 1), f"pair is {want} in the poset")
    return True


def canonicalize(emb: PlaneEmbedding, p: DirectedGraph = None) -> PlaneEmbedding:
    """Replace coordinates by their ranks so each becomes a permutation of
    {0, ..., n-1}.  Ties within one coordinate are broken by the other, which
    keeps the induced componentwise order intact; a fully duplicated point
    cannot be ranked and raises CoordinateTieError."""
    n = emb.n
    pts = list(emb.phi)
    if len(set(pts)) != n:
        seen = {}
        for v, pt in enumerate(pts):
            if pt in seen:
                raise CoordinateTieError((seen[pt] + 1, v + 1))
            seen[pt] = v
    if p is not None:
        reach = reachability(p)
        for i in range(n):
            for j in range(i + 1, n):
                shared = pts[i][0] == pts[j][0] or pts[i][1] == pts[j][1]
                if shared and not (reach[i, j] or reach[j, i]):
                    raise CoordinateTieError((i + 1, j + 1))
    by_first = sorted(range(n), key=lambda v: (pts[v][0], pts[v][1]))
    by_second = sorted(range(n), key=lambda v: (pts[v][1], pts[v][0]))
    rank1 = [0] * n
    rank2 = [0] * n
    for r, v in enumerate(by_first):
        rank1[v] = r
    for r, v in enumerate(by_second):
        rank2[v] = r
    out = PlaneEmbedding(tuple((rank1[v], rank2[v]) for v in range(n)))
    if p is not None:
        validate_embedding(p, out)
    return out


def _orient_incomparability(p: DirectedGraph):
    """Transitive orientation of the incomparability graph, as a dict
    {min, max} -> (from, to), or the conflicting pair when none exists.

    Forcing rules on placing u->v, for each third vertex w:
      - {u,w} incomparable but {v,w} not: w->u would need w->v, so u->w;
      - {v,w} incomparable but {u,w} not: v->w would need u->w, so w->v;
      - all three mutually incomparable: compose with existing arcs v->w
        (giving u->w) and w->u (giving w->v).
    Branching on the first unoriented edge keeps the search complete.
    """
    n = p.n
    reach = reachability(p)
    inc = [[False] * n for _ in range(n)]
    edges = []
    for u in range(n):
        for v in range(u + 1, n):
            if not (reach[u, v] or reach[v, u]):
                inc[u][v] = inc[v][u] = True
                edges.append((u, v))

    orient = {}

    def key(a, b):
        return (a, b) if a < b else (b, a)

    def place(u, v, trail):
        """Record u -> v and propagate; returns a conflicting pair or None."""
        k = key(u, v)
        cur = orient.get(k)
        if cur is not None:
            return None if cur == (u, v) else k
        orient[k] = (u, v)
        trail.append(k)
        for w in range(n):
            if w == u or w == v:
                continue
            iu, iv = inc[u][w], inc[v][w]
            if iu and not iv:
                bad = place(u, w, trail)
            elif iv and not iu:
                bad = place(w, v, trail)
            elif iu and iv:
                bad = None
                if orient.get(key(v, w)) == (v, w):
                    bad = place(u, w, trail)
                if bad is None and orient.get(key(u, w)) == (w, u):
                    bad = place(w, v, trail)
            else:
                bad = None
            if bad is not None:
                return bad
        return None

    def solve(idx):
        while idx < len(edges) and edges[idx] in orient:
            idx += 1
        if idx == len(edges):
            return None
        u, v = edges[idx]
        last_bad = None
        for direction in ((u, v), (v, u)):
            trail = []
            bad = place(*direction, trail)
            if bad is None:
                bad = solve(idx + 1)
            if bad is None:
                return None
            last_bad = bad
            for k in trail:
                del orient[k]
        return last_bad

    bad = solve(0)
    if bad is not None:
        return None, bad
    return orient, None


def embed_poset_2d(p: DirectedGraph, cap=EMBED_CAP) -> PlaneEmbedding:
    """Canonical plane embedding of a poset, or NotTwoDimensionalError with
    the obstructing incomparable pair.  Validated post-hoc on every success."""
    require_poset(p)
    if cap is not None and p.n > cap:
        raise TooLargeError("embed_poset_2d", p.n, cap)
    orient, bad = _orient_incomparability(p)
    if orient is None:
        raise NotTwoDimensionalError((bad[0] + 1, bad[1] + 1))
    n = p.n

    def ranks(extra):
        arcs = set(p.arcs)
        arcs.update(extra)
        total = DirectedGraph.from_arcs(n, arcs)
        rr = reachability(total)
        rank = [0] * n
        for v in range(n):
            if rr[v, v]:
                raise InvariantViolationError("linear-extension", "orientation closed a cycle")
            below = int(rr[:, v].sum())
            rank[v] = below
        if sorted(rank) != list(range(n)):
            raise InvariantViolationError("linear-extension", "extension is not total")
        return rank

    r1 = ranks(list(orient.values()))
    r2 = ranks([(v, u) for (u, v) in orient.values()])
    emb = PlaneEmbedding(tuple((r1[v], r2[v]) for v in range(n)))
    validate_embedding(p, emb)
    return emb
