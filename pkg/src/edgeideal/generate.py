"""Instance generators: weighted poset expansion, seeded random posets,
random two-dimensional posets with their witnessing embeddings, exhaustive
enumeration of small unmixed instances, and random square-free ideals for
the oracle cross-checks.

Randomness always flows through numpy's default_rng with an explicit seed.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .digraph import DirectedGraph, require_poset, transitive_closure
from .embedding import PlaneEmbedding, canonicalize
from .errors import SchemaError, TooLargeError
from .ideals import squarefree_ideal
from .matching import MatchedBipartiteGraph

ENUMERATE_CAP = 4


def expand_poset(dhat: DirectedGraph, zeta) -> MatchedBipartiteGraph:
    """Blow each poset vertex a up to a strong component of size zeta[a]
    (complete digraph inside, complete bipartite arcs along quotient arcs).
    The acyclic reduction of the result recovers (dhat, zeta) up to
    relabeling."""
    require_poset(dhat)
    zeta = tuple(int(z) for z in zeta)
    if len(zeta) != dhat.n or any(z < 1 for z in zeta):
        raise ValueError(f"zeta {zeta} does not weight {dhat.n} vertices")
    offsets = []
    total = 0
    for z in zeta:
        offsets.append(total)
        total += z
    arcs = set()
    for a in range(dhat.n):
        members = range(offsets[a], offsets[a] + zeta[a])
        for u in members:
            for v in members:
                if u != v:
                    arcs.add((u, v))
    for a, b in dhat.arcs:
        for u in range(offsets[a], offsets[a] + zeta[a]):
            for v in range(offsets[b], offsets[b] + zeta[b]):
                arcs.add((u, v))
    return MatchedBipartiteGraph.from_digraph(DirectedGraph.from_arcs(total, arcs))


def sharp_depth_instance(t, c) -> MatchedBipartiteGraph:
    """Depth exactly t on 2c vertices: a t-chain whose bottom vertex carries
    weight c - t + 1."""
    if not 1 <= t <= c:
        raise ValueError(f"need 1 <= t <= c, got t={t} c={c}")
    chain = DirectedGraph.from_arcs(t, [(a, b) for a in range(t) for b in range(a + 1, t)])
    zeta = (c - t + 1,) + (1,) * (t - 1)
    return expand_poset(chain, zeta)


def random_poset(n, density=0.35, seed=0) -> DirectedGraph:
    """Transitive closure of lower-triangular coin flips."""
    rng = np.random.default_rng(seed)
    arcs = []
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < density:
                arcs.append((i, j))
    return transitive_closure(DirectedGraph.from_arcs(n, arcs))


def random_2d_poset(n, seed=0):
    """(poset, embedding): intersect the identity order with a random
    permutation order, so the result embeds in the plane by construction."""
    rng = np.random.default_rng(seed)
    perm = rng.permutation(n)
    rank2 = [0] * n
    for pos, v in enumerate(perm):
        rank2[int(v)] = pos
    arcs = [(i, j) for i in range(n) for j in range(n)
            if i != j and i < j and rank2[i] < rank2[j]]
    p = DirectedGraph.from_arcs(n, arcs)
    emb = canonicalize(PlaneEmbedding(tuple((v, rank2[v]) for v in range(n))))
    return p, emb


def random_weights(t, c, seed=0):
    """A composition of c into t positive parts, heavy parts first come from
    the rng, not sorted."""
    if c < t:
        raise ValueError(f"cannot split c={c} into {t} positive weights")
    rng = np.random.default_rng(seed)
    cuts = sorted(rng.choice(np.arange(1, c), size=t - 1, replace=False)) if t > 1 else []
    parts = []
    prev = 0
    for cut in list(cuts) + [c]:
        parts.append(int(cut) - prev)
        prev = int(cut)
    return tuple(parts)


def enumerate_unmixed(c, cap=ENUMERATE_CAP):
    """Every unmixed instance on c matched pairs, i.e. every transitively
    closed digraph on c vertices, in ascending arc-mask order."""
    if c > cap:
        raise TooLargeError("enumerate_unmixed", c, cap)
    pairs = [(i, j) for i in range(c) for j in range(c) if i != j]
    from .digraph import is_transitively_closed

    for mask in range(1 << len(pairs)):
        arcs = [pairs[k] for k in range(len(pairs)) if (mask >> k) & 1]
        d = DirectedGraph.from_arcs(c, arcs)
        if is_transitively_closed(d):
            yield MatchedBipartiteGraph.from_digraph(d)


def random_squarefree_ideal(nvars, ngens, seed=0, min_support=2, max_support=4):
    """Random proper square-free monomial ideal on nvars named variables."""
    rng = np.random.default_rng(seed)
    names = tuple(f"v{k + 1}" for k in range(nvars))
    gens = []
    for _ in range(ngens):
        size = int(rng.integers(min_support, min(max_support, nvars) + 1))
        gens.append(frozenset(int(v) for v in rng.choice(nvars, size=size, replace=False)))
    return squarefree_ideal(names, gens)


@dataclass(frozen=True)
class GeneratorSpec:
    mode: str  # expand | random-poset | random-2d | sharp-depth | enumerate
    params: dict

    @staticmethod
    def from_json(doc):
        if not isinstance(doc, dict) or "mode" not in doc:
            raise SchemaError("generator spec needs a 'mode' key")
        mode = doc["mode"]
        params = {k: v for k, v in doc.items() if k != "mode"}
        if mode not in ("expand", "random-poset", "random-2d", "sharp-depth", "enumerate"):
            raise SchemaError(f"unknown generator mode {mode!r}")
        return GeneratorSpec(mode, params)


def run_spec(spec: GeneratorSpec):
    """Yield MatchedBipartiteGraph instances for a parsed spec."""
    p = spec.params
    try:
        if spec.mode == "expand":
            arcs = [(int(a) - 1, int(b) - 1) for a, b in p["arcs"]]
            n = int(p["n"])
            dhat = transitive_closure(DirectedGraph.from_arcs(n, arcs))
            yield expand_poset(dhat, p["zeta"])
        elif spec.mode == "random-poset":
            d = random_poset(int(p["n"]), float(p.get("density", 0.35)),
                             int(p.get("seed", 0)))
            zeta = p.get("zeta", (1,) * d.n)
            yield expand_poset(d, zeta)
        elif spec.mode == "random-2d":
            d, _ = random_2d_poset(int(p["n"]), int(p.get("seed", 0)))
            yield expand_poset(d, p.get("zeta", (1,) * d.n))
        elif spec.mode == "sharp-depth":
            yield sharp_depth_instance(int(p["t"]), int(p["c"]))
        elif spec.mode == "enumerate":
            yield from enumerate_unmixed(int(p["c"]))
    except KeyError as e:
        raise SchemaError(f"generator spec missing parameter {e.args[0]!r}") from e


def pinned_sweep():
    """The fixed instance family the cross-checks run on: every unmixed
    instance with c <= 3, plus pinned seeded instances for c = 4..7.
    Returns (description, MatchedBipartiteGraph) pairs."""
    out = []
    for c in (1, 2, 3):
        for k, mg in enumerate(enumerate_unmixed(c)):
            out.append((f"enum-c{c}-{k}", mg))
    pins = [
        ("pin-c4-weighted", expand_poset(random_poset(3, 0.5, seed=101), (2, 1, 1))),
        ("pin-c4-cm", expand_poset(random_poset(4, 0.4, seed=102), (1, 1, 1, 1))),
        ("pin-c5-weighted", expand_poset(random_poset(3, 0.5, seed=103), (2, 2, 1))),
        ("pin-c5-cm", expand_poset(random_poset(5, 0.45, seed=104), (1,) * 5)),
        ("pin-c6-weighted", expand_poset(random_poset(4, 0.5, seed=105), (2, 2, 1, 1))),
        ("pin-c6-cm", expand_poset(random_poset(6, 0.35, seed=106), (1,) * 6)),
        ("pin-c7-weighted", expand_poset(random_poset(5, 0.45, seed=107), (2, 2, 1, 1, 1))),
        ("pin-c7-cm", expand_poset(random_poset(7, 0.3, seed=108), (1,) * 7)),
    ]
    out.extend(pins)
    return out
