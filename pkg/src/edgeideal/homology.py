"""Brute-force Betti tables from simplicial homology.

For a square-free ideal, the multigraded Betti number in degree sigma is a
reduced homology rank of the generator-avoiding complex restricted to sigma.
The loop over sigma prunes cones (a vertex of sigma touched by no generator
inside sigma kills the homology), splits the complex into join factors along
connected components of the generator hypergraph, convolves their homology
vectors, and memoizes per component.  Ranks are exact over Q by default;
a prime field uses the dense kernels instead.

Homology vectors are tuples indexed from degree -1, so rh[0] is the rank in
degree -1 and the empty complex {<empty face>} has vector (1,).
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .digraph import antichains, reachability
from .errors import InvariantViolationError, NotCohenMacaulayError, TooLargeError
from ._kernels import rank_exact_sparse, rank_mod_p
from .ideals import (
    BETTI_CAP,
    SquareFreeMonomialIdeal,
    alexander_dual,
    colon_by_complement,
    edge_ideal,
)
from .matching import Classification, MatchedBipartiteGraph, classify


def parse_field(name):
    """'q' for the rationals or 'p:<prime>' for a prime field."""
    if name in ("q", "Q", "QQ"):
        return ("QQ", 0)
    if isinstance(name, str) and name.startswith("p:"):
        p = int(name[2:])
        if p < 2 or any(p % k == 0 for k in range(2, int(p ** 0.5) + 1)):
            raise ValueError(f"{p} is not prime")
        return (f"GF({p})", p)
    raise ValueError(f"unknown field {name!r}; use 'q' or 'p:<prime>'")


def _faces_by_dim(vertices, gen_masks):
    """Faces of the complex on `vertices` avoiding every generator, grouped
    by cardinality; faces[k] lists bitmasks of the k-element faces.  A face
    cannot shed a generator by growing, so subtrees below non-faces prune."""
    by_vertex = {v: [g for g in gen_masks if (g >> v) & 1] for v in vertices}
    unit = any(g == 0 for g in gen_masks)
    faces = [[] if unit else [0]]

    def grow(mask, size, start):
        for idx in range(start, len(vertices)):
            v = vertices[idx]
            new = mask | (1 << v)
            if any(g & new == g for g in by_vertex[v]):
                continue
            while len(faces) <= size + 1:
                faces.append([])
            faces[size + 1].append(new)
            grow(new, size + 1, idx + 1)

    if not unit:
        grow(0, 0, 0)
    return faces


def _boundary_rank(faces, lower, field_p):
    """Rank of the boundary map from the span of `faces` (k-masks) to the
    span of `lower` ((k-1)-masks)."""
    index = {m: i for i, m in enumerate(lower)}
    cols = []
    for m in faces:
        col = {}
        bits = []
        mm = m
        while mm:
            bits.append(mm & -mm)
            mm &= mm - 1
        for pos, bit in enumerate(bits):
            col[index[m & ~bit]] = -1 if pos % 2 else 1
        cols.append(col)
    if field_p == 0:
        return rank_exact_sparse(cols)
    mat = np.zeros((len(lower), len(cols)), dtype=np.int64)
    for ci, col in enumerate(cols):
        for ri, val in col.items():
            mat[ri, ci] = val
    return rank_mod_p(mat, field_p)


def _homology_vector(faces, field_p):
    """Reduced homology ranks (rh[d+1] = rank in degree d) of the complex
    whose faces-by-size are given, the empty face included at index 0."""
    if not faces or not faces[0]:
        return (0,)  # void complex
    sizes = [len(f) for f in faces]
    ranks = [0] * (len(faces) + 1)
    for k in range(1, len(faces)):
        ranks[k] = _boundary_rank(faces[k], faces[k - 1], field_p)
    rh = tuple(sizes[k] - ranks[k] - ranks[k + 1] for k in range(len(faces)))
    lhs = sum((-1) ** k * sizes[k] for k in range(len(faces)))
    rhs = sum((-1) ** k * rh[k] for k in range(len(rh)))
    if lhs != rhs:
        raise InvariantViolationError("euler", f"{lhs} != {rhs}")
    return rh


def _convolve(u, v):
    out = [0] * (len(u) + len(v) - 1)
    for a, ua in enumerate(u):
        if ua:
            for b, vb in enumerate(v):
                out[a + b] += ua * vb
    return tuple(out)


class _RestrictionOracle:
    """Homology of restricted complexes of one ideal, memoized per connected
    piece of the generator hypergraph."""

    def __init__(self, gen_supports, field_p):
        self.gen_masks = [sum(1 << v for v in s) for s in gen_supports]
        self.field_p = field_p
        self.memo = {}

    def rh_component(self, comp_mask):
        got = self.memo.get(comp_mask)
        if got is not None:
            return got
        vertices = _mask_bits(comp_mask)
        gens = [g for g in self.gen_masks if g and g & comp_mask == g]
        rh = _homology_vector(_faces_by_dim(vertices, gens), self.field_p)
        self.memo[comp_mask] = rh
        return rh

    def rh_sigma(self, sigma_mask):
        """Homology vector of the restriction to sigma, or None when some
        vertex of sigma is a cone point (vector would be all zero)."""
        if any(g == 0 for g in self.gen_masks):
            return None
        inside = [g for g in self.gen_masks if g & sigma_mask == g]
        covered = 0
        for g in inside:
            covered |= g
        if covered != sigma_mask:
            return None  # some vertex in no generator: cone
        comps = _components(inside)
        rh = (1,)
        for comp in comps:
            rh = _convolve(rh, self.rh_component(comp))
            if not any(rh):
                return None
        return rh


def _mask_bits(mask):
    out = []
    while mask:
        b = mask & -mask
        out.append(b.bit_length() - 1)
        mask &= mask - 1
    return out


def _components(gen_masks):
    """Union the generator supports into connected vertex masks."""
    comps = []
    for g in gen_masks:
        merged = g
        rest = []
        for c in comps:
            if c & merged:
                merged |= c
            else:
                rest.append(c)
        rest.append(merged)
        comps = rest
    return sorted(comps)


@dataclass(frozen=True)
class BettiTable:
    variables: tuple
    field: str
    entries: tuple  # of ((l, sigma_frozenset), value), sorted

    def entry_map(self):
        return dict(self.entries)

    def graded(self):
        """Classical table beta_{l, j} summed over |sigma| = j."""
        out = {}
        for (l, sigma), val in self.entries:
            key = (l, len(sigma))
            out[key] = out.get(key, 0) + val
        return dict(sorted(out.items()))

    def regularity(self):
        return max(len(sigma) - l for (l, sigma), _ in self.entries)

    def projdim(self):
        return max(l for (l, _), _ in self.entries)

    def depth(self):
        return len(self.variables) - self.projdim()

    def to_json(self):
        return {
            "schema": "v1",
            "field": self.field,
            "variables": list(self.variables),
            "entries": [
                {"l": l, "sigma": sorted(self.variables[v] for v in sigma), "value": val}
                for (l, sigma), val in self.entries
            ],
            "graded": [[l, j, v] for (l, j), v in self.graded().items()],
            "regularity": self.regularity(),
            "projective_dimension": self.projdim(),
            "depth": self.depth(),
        }


def betti_table(ideal: SquareFreeMonomialIdeal, field="q", cap=BETTI_CAP) -> BettiTable:
    """Multigraded Betti numbers of R/I by reduced homology of restricted
    complexes, over Q ('q') or GF(p) ('p:<prime>')."""
    fname, p = parse_field(field)
    if cap is not None and ideal.n > cap:
        raise TooLargeError("betti_table", ideal.n, cap)
    oracle = _RestrictionOracle(ideal.gens, p)
    support = 0
    for g in oracle.gen_masks:
        support |= g
    entries = {}
    sigma = support
    while True:  # enumerate submasks of the support, descending
        rh = oracle.rh_sigma(sigma)
        if rh is not None:
            members = frozenset(_mask_bits(sigma))
            size = len(members)
            for idx, val in enumerate(rh):
                if val:
                    d = idx - 1
                    entries[(size - d - 1, members)] = val
        if sigma == 0:
            break
        sigma = (sigma - 1) & support
    table = BettiTable(
        variables=ideal.variables,
        field=fname,
        entries=tuple(sorted(entries.items(), key=lambda kv: (kv[0][0], sorted(kv[0][1])))),
    )
    if table.entry_map().get((0, frozenset())) != 1:
        raise InvariantViolationError("betti-degree-zero")
    return table


def oracle_invariants(ideal: SquareFreeMonomialIdeal, field="q", cap=BETTI_CAP):
    """(regularity, projective dimension, depth) of R/I."""
    t = betti_table(ideal, field=field, cap=cap)
    return t.regularity(), t.projdim(), t.depth()


def dual_betti_table_via_links(ideal: SquareFreeMonomialIdeal, field="q", cap=BETTI_CAP):
    """Betti table of the Alexander dual, viewed as a module, computed from
    links inside the complex of `ideal` rather than from the dual's own
    restricted complexes."""
    fname, p = parse_field(field)
    if cap is not None and ideal.n > cap:
        raise TooLargeError("dual_betti_table_via_links", ideal.n, cap)
    gen_masks = [sum(1 << v for v in s) for s in ideal.gens]
    full = (1 << ideal.n) - 1
    entries = {}
    sigma = full
    while True:
        cbar = full & ~sigma
        if all(g & cbar != g for g in gen_masks):  # complement must be a face
            supports = colon_by_complement(ideal, frozenset(_mask_bits(sigma)))
            oracle = _RestrictionOracle(supports, p)
            rh = oracle.rh_sigma(sigma)
            if rh is not None:
                members = frozenset(_mask_bits(sigma))
                for idx, val in enumerate(rh):
                    if val:
                        entries[(idx, members)] = val  # l - 1 = idx - 1
        if sigma == 0:
            break
        sigma = (sigma - 1) & full
    return BettiTable(
        variables=ideal.variables,
        field=fname,
        entries=tuple(sorted(entries.items(), key=lambda kv: (kv[0][0], sorted(kv[0][1])))),
    )


def quotient_to_module_table(table: BettiTable) -> BettiTable:
    """Betti numbers of the ideal as a module: shift the quotient table down
    by one and drop the rank-one entry at (0, empty)."""
    entries = tuple(((l - 1, sigma), val) for (l, sigma), val in table.entries if l >= 1)
    return BettiTable(table.variables, table.field, entries)


def terai_check(ideal: SquareFreeMonomialIdeal, field="q", cap=BETTI_CAP) -> bool:
    """projdim R/I equals the regularity of the Alexander dual ideal
    (regularity of the dual quotient plus one)."""
    pd = betti_table(ideal, field=field, cap=cap).projdim()
    dual = alexander_dual(ideal, cap=cap)
    reg_dual = betti_table(dual, field=field, cap=cap).regularity() + 1
    return pd == reg_dual


def dual_betti_relation_check(ideal: SquareFreeMonomialIdeal, field="q", cap=BETTI_CAP) -> bool:
    """Multidegree-by-multidegree: the dual's Betti numbers (computed from
    the dual's own restricted complexes) match the colon-link homology of the
    source ideal."""
    dual_module = quotient_to_module_table(
        betti_table(alexander_dual(ideal, cap=cap), field=field, cap=cap))
    via_links = dual_betti_table_via_links(ideal, field=field, cap=cap)
    return dual_module.entries == via_links.entries


@dataclass(frozen=True)
class DualShape:
    antichain: tuple  # A, matched indices
    subset: tuple  # B, a subset of A
    sigma: frozenset  # variable indices of the predicted multidegree


def dual_shape_pairs(mg: MatchedBipartiteGraph):
    """Predicted dual Betti multidegrees for a Cohen-Macaulay graph: for each
    antichain A and B inside A, the y's above A, the x's elsewhere, and the
    x's of B again."""
    d = mg.digraph()
    reach = reachability(d)
    shapes = []
    for a_set in antichains(d):
        above = set(a_set)
        for v in range(mg.c):
            if any(reach[a, v] for a in a_set):
                above.add(v)
        base = {2 * i for i in range(mg.c) if i not in above} | {2 * j + 1 for j in above}
        for b_mask in range(1 << len(a_set)):
            b = tuple(a_set[k] for k in range(len(a_set)) if (b_mask >> k) & 1)
            sigma = frozenset(base | {2 * i for i in b})
            if len(sigma) != mg.c + len(b):
                raise InvariantViolationError("dual-shape-size")
            shapes.append(DualShape(tuple(a_set), b, sigma))
    return shapes


def dual_shape_check(mg: MatchedBipartiteGraph, field="q", cap=BETTI_CAP) -> bool:
    """Every nonzero dual Betti entry of a Cohen-Macaulay edge ideal is 1 and
    sits at a predicted multidegree with l = |B|, and every predicted
    multidegree carries one."""
    bg = mg.to_bipartite_graph()
    if classify(bg) != Classification.COHEN_MACAULAY:
        raise NotCohenMacaulayError("dual shape prediction needs a Cohen-Macaulay graph")
    table = dual_betti_table_via_links(edge_ideal(mg), field=field, cap=cap)
    predicted = {}
    for shape in dual_shape_pairs(mg):
        predicted.setdefault((len(shape.subset), shape.sigma), 0)
        predicted[(len(shape.subset), shape.sigma)] += 1
    actual = table.entry_map()
    if set(actual) != set(predicted):
        return False
    return all(val == 1 for val in actual.values()) and all(v == 1 for v in predicted.values())
