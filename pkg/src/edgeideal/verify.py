"""Independent verification that a generator set cuts out the edge ideal up
to radical: each generator must live inside the edge ideal (syntactic, every
term an edge), and each edge monomial must lie in the radical of the
generator ideal (Rabinowitsch membership over a chosen field, GF(32003) by
default).

The Groebner basis of the generator ideal is computed once and reused as a
known-basis prefix for every membership query; queries are independent and
may run on a small thread pool (EDGEIDEAL_THREADS).
"""
from __future__ import annotations

import os
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from .errors import GroebnerTimeoutError, TooLargeError
from .groebner import (
    DEFAULT_BUDGET,
    GROEBNER_CAP,
    Ring,
    buchberger,
    field_for,
    radical_membership,
)
from .matching import MatchedBipartiteGraph, require_unmixed
from .stci import GeneratorSet

DEFAULT_FIELD = "p:32003"


def generator_ring(c, field):
    names = []
    for i in range(c):
        names.append(f"x{i + 1}")
        names.append(f"y{i + 1}")
    return Ring(tuple(names), field_for(field))


def terms_to_poly(ring, terms):
    out = {}
    for i, j in terms:
        exps = [0] * ring.n
        exps[2 * i] += 1
        exps[2 * j + 1] += 1
        out[tuple(exps)] = ring.field.one
    return out


@dataclass(frozen=True)
class EdgeCheck:
    edge: tuple  # (i, j) matched indices
    monomial: str
    status: str  # verified | failed | timeout | skipped
    seconds: float


@dataclass(frozen=True)
class VerificationReport:
    field: str
    containment_ok: bool
    gb_seconds: float
    checks: tuple
    verified: bool

    def to_json(self):
        return {
            "schema": "v1",
            "field": self.field,
            "containment_ok": self.containment_ok,
            "gb_seconds": round(self.gb_seconds, 3),
            "verified": self.verified,
            "memberships": [
                {"edge": c.monomial, "status": c.status, "seconds": round(c.seconds, 3)}
                for c in self.checks
            ],
        }


def verify_arank_generators(g, gs: GeneratorSet, field=DEFAULT_FIELD,
                            budget=DEFAULT_BUDGET, cap=GROEBNER_CAP) -> VerificationReport:
    """Check that the generator set presents the edge ideal up to radical."""
    mg = g if isinstance(g, MatchedBipartiteGraph) else require_unmixed(g)
    nvars = 2 * mg.c + 1  # auxiliary included
    if cap is not None and nvars > cap:
        raise TooLargeError("verify_arank_generators", nvars, cap)
    edges = sorted(mg.edges)
    terms = gs.all_terms()
    containment_ok = sorted(terms) == edges  # partition: each edge exactly once

    ring = generator_ring(mg.c, field)
    gen_polys = [terms_to_poly(ring, t) for t in list(gs.gens_g) + list(gs.gens_h)]
    t0 = time.perf_counter()
    try:
        gb = buchberger(ring, gen_polys, budget=budget)
    except GroebnerTimeoutError:
        checks = tuple(
            EdgeCheck(e, f"x{e[0] + 1}*y{e[1] + 1}", "timeout", 0.0) for e in edges)
        return VerificationReport(ring.field.name, containment_ok,
                                  time.perf_counter() - t0, checks, False)
    gb_seconds = time.perf_counter() - t0

    def run_one(edge):
        i, j = edge
        mono = f"x{i + 1}*y{j + 1}"
        f = terms_to_poly(ring, [edge])
        start = time.perf_counter()
        try:
            ok = radical_membership(ring, f, gb, budget=budget,
                                    assume_gb_prefix=len(gb))
            status = "verified" if ok else "failed"
        except GroebnerTimeoutError:
            status = "timeout"
        return EdgeCheck(edge, mono, status, time.perf_counter() - start)

    threads = max(1, int(os.environ.get("EDGEIDEAL_THREADS", "1")))
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            checks = tuple(pool.map(run_one, edges))
    else:
        checks = tuple(run_one(e) for e in edges)
    verified = containment_ok and all(c.status == "verified" for c in checks)
    return VerificationReport(ring.field.name, containment_ok, gb_seconds, checks, verified)
