"""Bipartite graph model: JSON parsing/serialization and the brute-force
oracles that every formula in the package is checked against (minimal vertex
covers, unmixedness, maximum pairwise-disconnected edge sets).

The oracles enumerate subsets, so they carry a size cap (default 24) that an
explicit argument can override.
"""
from __future__ import annotations

import json
from dataclasses import dataclass

from .digraph import _exists_independent, maximal_independent_sets
from .errors import (
    DuplicateEdgeError,
    EmptyGraphError,
    IsolatedVertexError,
    SchemaError,
    TooLargeError,
    UnknownLabelError,
)

ORACLE_CAP = 24


@dataclass(frozen=True)
class BipartiteGraph:
    left: tuple  # sorted labels
    right: tuple
    edges: frozenset  # of (li, ri) index pairs into left/right

    @staticmethod
    def from_label_edges(edges):
        """Build from (left_label, right_label) pairs; vertex sets are the
        labels that occur, so no isolated vertices can arise."""
        edges = list(edges)
        if not edges:
            raise EmptyGraphError()
        left = tuple(sorted({l for l, _ in edges}))
        right = tuple(sorted({r for _, r in edges}))
        li = {x: i for i, x in enumerate(left)}
        ri = {x: i for i, x in enumerate(right)}
        seen = set()
        for l, r in edges:
            if (l, r) in seen:
                raise DuplicateEdgeError(l, r)
            seen.add((l, r))
        return BipartiteGraph(left, right, frozenset((li[l], ri[r]) for l, r in edges))

    @property
    def n_left(self):
        return len(self.left)

    @property
    def n_right(self):
        return len(self.right)

    @property
    def n_vertices(self):
        return self.n_left + self.n_right

    def label_edges(self):
        return sorted((self.left[l], self.right[r]) for l, r in self.edges)

    def left_neighbors(self, li):
        return sorted(r for l, r in self.edges if l == li)


def parse_graph(doc) -> BipartiteGraph:
    """Parse {"left": [...], "right": [...], "edges": [[l, r], ...]}.

    Labels are strings; vertex order is their sorted order.  Raises ParseError
    subclasses naming the offending element.
    """
    if isinstance(doc, (str, bytes)):
        try:
            doc = json.loads(doc)
        except json.JSONDecodeError as e:
            raise SchemaError(f"invalid JSON: {e}") from e
    if not isinstance(doc, dict):
        raise SchemaError("top-level document must be an object")
    for key in ("left", "right", "edges"):
        if key not in doc:
            raise SchemaError(f"missing key {key!r}")
        if not isinstance(doc[key], list):
            raise SchemaError(f"{key!r} must be a list")
    for side in ("left", "right"):
        labels = doc[side]
        if not all(isinstance(x, str) for x in labels):
            raise SchemaError(f"{side!r} labels must be strings")
        if len(set(labels)) != len(labels):
            dup = sorted(x for x in labels if labels.count(x) > 1)[0]
            raise SchemaError(f"duplicate {side} label {dup!r}")
    if not doc["left"] or not doc["right"] or not doc["edges"]:
        raise EmptyGraphError()
    left = tuple(sorted(doc["left"]))
    right = tuple(sorted(doc["right"]))
    li = {x: i for i, x in enumerate(left)}
    ri = {x: i for i, x in enumerate(right)}
    edges = set()
    for item in doc["edges"]:
        if not (isinstance(item, list) and len(item) == 2):
            raise SchemaError(f"edge {item!r} must be a [left, right] pair")
        l, r = item
        if l not in li:
            raise UnknownLabelError(l, "left")
        if r not in ri:
            raise UnknownLabelError(r, "right")
        e = (li[l], ri[r])
        if e in edges:
            raise DuplicateEdgeError(l, r)
        edges.add(e)
    touched_l = {l for l, _ in edges}
    touched_r = {r for _, r in edges}
    for i, x in enumerate(left):
        if i not in touched_l:
            raise IsolatedVertexError(x)
    for i, x in enumerate(right):
        if i not in touched_r:
            raise IsolatedVertexError(x)
    return BipartiteGraph(left, right, frozenset(edges))


def to_document(g: BipartiteGraph) -> dict:
    return {
        "left": list(g.left),
        "right": list(g.right),
        "edges": [[l, r] for l, r in g.label_edges()],
    }


def dumps_graph(g: BipartiteGraph) -> str:
    return json.dumps(to_document(g), indent=2) + "\n"


@dataclass(frozen=True)
class VertexCover:
    left: tuple  # sorted left labels in the cover
    right: tuple

    @property
    def size(self):
        return len(self.left) + len(self.right)


def _vertex_masks(g: BipartiteGraph):
    # combined indexing: left vertex l at bit l, right vertex r at bit n_left + r
    n = g.n_vertices
    nbr = [0] * n
    for l, r in g.edges:
        nbr[l] |= 1 << (g.n_left + r)
        nbr[g.n_left + r] |= 1 << l
    return nbr, n


def minimal_vertex_covers(g: BipartiteGraph, cap=ORACLE_CAP):
    """All minimal vertex covers, as complements of maximal independent sets.
    Returned sorted by (size, members); exhaustive, so capped."""
    nbr, n = _vertex_masks(g)
    if cap is not None and n > cap:
        raise TooLargeError("minimal_vertex_covers", n, cap)
    full = (1 << n) - 1
    covers = []
    for mis in maximal_independent_sets(nbr, n):
        cov = full & ~mis
        lefts = tuple(g.left[i] for i in range(g.n_left) if (cov >> i) & 1)
        rights = tuple(g.right[i] for i in range(g.n_right) if (cov >> (g.n_left + i)) & 1)
        covers.append(VertexCover(lefts, rights))
    covers.sort(key=lambda c: (c.size, c.left, c.right))
    return covers


def height(g: BipartiteGraph, cap=ORACLE_CAP) -> int:
    """Minimum vertex cover size (= height of the edge ideal)."""
    return minimal_vertex_covers(g, cap=cap)[0].size


def is_unmixed_oracle(g: BipartiteGraph, cap=ORACLE_CAP) -> bool:
    """Whether all minimal vertex covers share one size, by enumeration."""
    sizes = {c.size for c in minimal_vertex_covers(g, cap=cap)}
    return len(sizes) == 1


@dataclass(frozen=True)
class DisconnectedEdgeSet:
    edges: tuple  # of (left_label, right_label) pairs, sorted

    @property
    def size(self):
        return len(self.edges)


def max_pairwise_disconnected(g: BipartiteGraph, cap=ORACLE_CAP):
    """Largest edge set in which no two edges share a vertex or are joined by
    another edge of g (an induced matching).  (size, witness) by brute force
    over the edge compatibility graph."""
    edges = g.label_edges()
    m = len(edges)
    if cap is not None and m > cap:
        raise TooLargeError("max_pairwise_disconnected", m, cap)
    eset = {(l, r) for l, r in edges}
    nbr = [0] * m
    for i in range(m):
        a, b = edges[i]
        for j in range(i + 1, m):
            c, d = edges[j]
            clash = a == c or b == d or (a, d) in eset or (c, b) in eset
            if clash:
                nbr[i] |= 1 << j
                nbr[j] |= 1 << i
    if m == 0:
        return DisconnectedEdgeSet(())
    best = max(bin(x).count("1") for x in maximal_independent_sets(nbr, m))
    chosen, cand, remaining = 0, (1 << m) - 1, best
    for v in range(m):
        if not (cand >> v) & 1:
            continue
        take = cand & ~nbr[v] & ~(1 << v)
        if _exists_independent(nbr, take, remaining - 1):
            chosen |= 1 << v
            cand = take
            remaining -= 1
            if remaining == 0:
                break
    return DisconnectedEdgeSet(tuple(edges[i] for i in range(m) if (chosen >> i) & 1))
