"""Square-free monomial ideals as simplicial data.

Generators are variable-index sets; the minimal set is kept sorted by
(size, members) so equal ideals compare equal.  The Alexander dual collects
the minimal hitting sets of the generator supports.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import TooLargeError
from .graphs import BipartiteGraph
from .matching import MatchedBipartiteGraph

BETTI_CAP = 16


def _minimalize(supports):
    sups = sorted(set(supports), key=lambda s: (len(s), sorted(s)))
    kept = []
    for s in sups:
        if not any(k <= s for k in kept):
            kept.append(s)
    return tuple(kept)


@dataclass(frozen=True)
class SquareFreeMonomialIdeal:
    variables: tuple  # names; indices into this tuple appear in gens
    gens: tuple  # of frozenset of variable indices, minimal, sorted

    @property
    def n(self):
        return len(self.variables)

    def gen_strings(self):
        return ["*".join(sorted(self.variables[v] for v in s)) for s in self.gens]

    def support(self):
        out = set()
        for s in self.gens:
            out |= s
        return frozenset(out)

    def is_unit(self):
        return any(len(s) == 0 for s in self.gens)


def squarefree_ideal(variables, supports) -> SquareFreeMonomialIdeal:
    variables = tuple(variables)
    gens = _minimalize(frozenset(s) for s in supports)
    for s in gens:
        for v in s:
            if not 0 <= v < len(variables):
                raise ValueError(f"variable index {v} out of range")
    return SquareFreeMonomialIdeal(variables, gens)


def edge_ideal(mg: MatchedBipartiteGraph) -> SquareFreeMonomialIdeal:
    """Edge ideal in k[x1, y1, ..., xc, yc]; x_i at index 2i, y_j at 2j+1."""
    names = []
    for i in range(mg.c):
        names.append(f"x{i + 1}")
        names.append(f"y{i + 1}")
    return squarefree_ideal(names, ({2 * i, 2 * j + 1} for i, j in mg.edges))


def edge_ideal_of_graph(g: BipartiteGraph) -> SquareFreeMonomialIdeal:
    """Edge ideal of a plain bipartite graph; variables are the labels, left
    block first."""
    names = list(g.left) + list(g.right)
    return squarefree_ideal(names, ({l, g.n_left + r} for l, r in g.edges))


def alexander_dual(i: SquareFreeMonomialIdeal, cap=BETTI_CAP) -> SquareFreeMonomialIdeal:
    """Minimal hitting sets of the generator supports."""
    if cap is not None and i.n > cap:
        raise TooLargeError("alexander_dual", i.n, cap)
    partial = [frozenset()]
    for s in i.gens:
        nxt = set()
        for d in partial:
            if d & s:
                nxt.add(d)
            else:
                for v in s:
                    nxt.add(d | {v})
        # strip non-minimal hitters as we go to keep the frontier small
        frontier = sorted(nxt, key=len)
        kept = []
        for d in frontier:
            if not any(k <= d for k in kept if k != d):
                kept.append(d)
        partial = kept
    return SquareFreeMonomialIdeal(i.variables, _minimalize(partial))


def colon_by_complement(i: SquareFreeMonomialIdeal, sigma: frozenset) -> tuple:
    """Generator supports of (I : product of variables outside sigma),
    restricted to sigma.  An empty support means the colon is the unit ideal."""
    return _minimalize(frozenset(s & sigma) for s in i.gens)
