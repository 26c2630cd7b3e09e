"""Order-theoretic formulas for the homological invariants of an unmixed
edge ideal: regularity from the largest antichain of the matching digraph,
depth from the heaviest antichain of its acyclic reduction, projective
dimension by Auslander-Buchsbaum.

Each public function cross-checks the cheap structural identities and raises
InvariantViolationError when they fail.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .digraph import DirectedGraph, antichains, max_antichain, max_independent_set, underlying_masks
from .errors import InvariantViolationError, TooLargeError
from .graphs import BipartiteGraph, max_pairwise_disconnected
from .matching import AcyclicReduction, Classification, acyclic_reduction, classify, require_unmixed


def regularity(d: DirectedGraph):
    """(reg, witness): Castelnuovo-Mumford regularity of R/I equals the
    maximum antichain size of the matching digraph.  The reduction to strong
    components preserves it; both sides are computed and compared."""
    size, witness = max_antichain(d)
    red = acyclic_reduction(d)
    qsize, _ = max_antichain(red.quotient)
    if qsize != size:
        raise InvariantViolationError("regularity-reduction", f"{size} vs quotient {qsize}")
    return size, witness


def coclique_number(d: DirectedGraph):
    """Max independent set of the underlying undirected graph (arcs, not
    paths).  Coincides with the max antichain when d is transitively closed."""
    return max_independent_set(underlying_masks(d), d.n)


def max_weight_antichain_deficiency(red: AcyclicReduction):
    """max over antichains B of the quotient of (total weight of B) - |B|,
    together with the lexicographically smallest maximizing antichain."""
    best, best_b = -1, None
    for b_set in antichains(red.quotient):
        val = sum(red.zeta[a] for a in b_set) - len(b_set)
        if val > best:
            best, best_b = val, b_set
    return best, best_b


def depth(d: DirectedGraph):
    """(depth of R/I, witness antichain of the quotient), c = d.n vertices on
    each side."""
    red = acyclic_reduction(d)
    defc, witness = max_weight_antichain_deficiency(red)
    dep = d.n - defc
    if not (red.t <= dep <= d.n):
        raise InvariantViolationError("depth-range", f"depth {dep} not in [{red.t}, {d.n}]")
    return dep, witness


def projective_dimension(d: DirectedGraph) -> int:
    dep, _ = depth(d)
    return 2 * d.n - dep


@dataclass(frozen=True)
class InvariantsReport:
    classification: str
    c: int = None  # height of the edge ideal (= matching size when unmixed)
    regularity: int = None
    reg_witness: tuple = None
    depth: int = None
    depth_witness: tuple = None
    projective_dimension: int = None
    coclique: int = None
    scc_count: int = None
    zeta: tuple = None
    r_lower: int = None  # brute-forced max pairwise-disconnected edge count
    notes: tuple = field(default_factory=tuple)

    def to_json(self):
        out = {"schema": "v1", "classification": self.classification}
        for key in ("c", "regularity", "depth", "projective_dimension", "coclique",
                    "scc_count", "r_lower"):
            val = getattr(self, key)
            if val is not None:
                out[key] = val
        if self.reg_witness is not None:
            out["reg_witness"] = [v + 1 for v in self.reg_witness]
        if self.depth_witness is not None:
            out["depth_witness"] = [a + 1 for a in self.depth_witness]
        if self.zeta is not None:
            out["zeta"] = list(self.zeta)
        if self.notes:
            out["notes"] = list(self.notes)
        return out


def invariants_report(g: BipartiteGraph, oracle_cap=None) -> InvariantsReport:
    """Formula invariants for an unmixed graph; for anything else a partial
    report holding only what still makes sense."""
    cls = classify(g)
    try:
        kwargs = {} if oracle_cap is None else {"cap": oracle_cap}
        r_lower = max_pairwise_disconnected(g, **kwargs).size
    except TooLargeError:
        r_lower = None
    if cls in (Classification.NO_PERFECT_MATCHING, Classification.PERFECTLY_MATCHED_ONLY):
        return InvariantsReport(
            classification=cls.value,
            r_lower=r_lower,
            notes=("formula invariants need an unmixed graph",),
        )
    mg = require_unmixed(g)
    d = mg.digraph()
    red = acyclic_reduction(d)
    reg, reg_wit = regularity(d)
    dep, dep_wit = depth(d)
    pd = 2 * d.n - dep
    coc, _ = coclique_number(d)
    if dep + pd != 2 * d.n:
        raise InvariantViolationError("auslander-buchsbaum")
    if reg > d.n:
        raise InvariantViolationError("reg-le-c", f"reg {reg} > c {d.n}")
    if coc < reg:
        raise InvariantViolationError("coclique-ge-reg", f"{coc} < {reg}")
    if r_lower is not None and r_lower != reg:
        raise InvariantViolationError("r-equals-reg", f"r={r_lower} reg={reg}")
    return InvariantsReport(
        classification=cls.value,
        c=d.n,
        regularity=reg,
        reg_witness=reg_wit,
        depth=dep,
        depth_witness=dep_wit,
        projective_dimension=pd,
        coclique=coc,
        scc_count=red.t,
        zeta=red.zeta,
        r_lower=r_lower,
    )
