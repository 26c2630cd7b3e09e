"""Command line front end.

Subcommands: classify | invariants | primes | stci | oracle | gen | check.
Reports are JSON (schema v1); --pretty switches to aligned text.  Exit codes:
0 ok, 2 bad input or over a cap, 3 not unmixed, 4 no plane embedding,
5 Groebner budget exceeded, 6 an internal invariant or requested check failed.
"""
import argparse
import json
import sys
from importlib import resources

from .embedding import PlaneEmbedding
from .errors import (
    CoordinateTieError,
    EdgeIdealError,
    GroebnerTimeoutError,
    InvalidEmbeddingError,
    InvariantViolationError,
    NotTwoDimensionalError,
    NotUnmixedError,
    ParseError,
    TooLargeError,
)
from .generate import (
    GeneratorSpec,
    enumerate_unmixed,
    expand_poset,
    pinned_sweep,
    random_2d_poset,
    random_poset,
    random_squarefree_ideal,
    random_weights,
    run_spec,
    sharp_depth_instance,
)
from .graphs import (
    max_pairwise_disconnected,
    minimal_vertex_covers,
    parse_graph,
    to_document,
)
from .homology import (
    BETTI_CAP,
    betti_table,
    dual_betti_relation_check,
    dual_shape_check,
    oracle_invariants,
    terai_check,
)
from .ideals import edge_ideal, edge_ideal_of_graph
from .invariants import depth, invariants_report, projective_dimension, regularity
from .matching import (
    Classification,
    acyclic_reduction,
    associated_primes,
    classify,
    find_perfect_matching,
    require_unmixed,
)
from .stci import arank_generators, check_linearizations, render_gamma
from .stci import build_gamma_graph, column_linearization, row_linearization
from .verify import DEFAULT_FIELD, verify_arank_generators
from .groebner import DEFAULT_BUDGET

SCHEMA = "v1"


def _load_doc(arg):
    """Positional inputs take a file path, '-' for stdin, or inline JSON."""
    try:
        if arg == "-":
            return json.load(sys.stdin)
        if arg.lstrip().startswith("{"):
            return json.loads(arg)
        with open(arg) as fh:
            return json.load(fh)
    except json.JSONDecodeError as e:
        raise ParseError(f"invalid JSON in {arg!r}: {e}") from e
    except OSError as e:
        raise ParseError(f"cannot read {arg!r}: {e}") from e


def _fixture(name):
    return json.loads(resources.files("edgeideal.data").joinpath(name).read_text())


def _emit(args, report, pretty=None):
    text = json.dumps(report, indent=2)
    if args.json:
        with open(args.json, "w") as fh:
            fh.write(text + "\n")
    if getattr(args, "quiet", False):
        return
    if getattr(args, "pretty", False) and pretty is not None:
        print(pretty)
    else:
        print(text)


def _kv_lines(pairs):
    width = max(len(k) for k, _ in pairs)
    return "\n".join(f"{k.ljust(width)}  {v}" for k, v in pairs)


# ---------------------------------------------------------------- classify

def cmd_classify(args):
    g = parse_graph(_load_doc(args.graph))
    cls = classify(g)
    report = {"schema": SCHEMA, "classification": cls.value}
    pairs = [("classification", cls.value)]
    mg = find_perfect_matching(g)
    if mg is not None:
        d = mg.digraph()
        report["c"] = mg.c
        report["matching"] = [[mg.left_labels[k], mg.right_labels[k]]
                              for k in range(mg.c)]
        report["arcs"] = [[i + 1, j + 1] for i, j in sorted(d.arcs)]
        pairs.append(("c", mg.c))
        pairs.append(("matching", " ".join(
            f"{a}-{b}" for a, b in report["matching"])))
        pairs.append(("arcs", " ".join(
            f"{i}->{j}" for i, j in report["arcs"]) or "(none)"))
        if cls in (Classification.UNMIXED, Classification.COHEN_MACAULAY):
            red = acyclic_reduction(d)
            report["scc_count"] = len(red.components)
            report["zeta"] = list(red.zeta)
            report["components"] = [[v + 1 for v in comp] for comp in red.components]
            report["quotient_arcs"] = [[a + 1, b + 1]
                                       for a, b in sorted(red.quotient.arcs)]
            pairs.append(("scc_count", len(red.components)))
            pairs.append(("zeta", " ".join(str(z) for z in red.zeta)))
    _emit(args, report, _kv_lines(pairs))
    return 0


# -------------------------------------------------------------- invariants

def cmd_invariants(args):
    g = parse_graph(_load_doc(args.graph))
    rep = invariants_report(g)
    report = rep.to_json()
    if args.oracle:
        ideal = edge_ideal_of_graph(g)
        reg, pd, dep = oracle_invariants(ideal, field=args.field,
                                         cap=args.max_oracle_vars)
        report["oracle"] = {"field": args.field, "regularity": reg,
                            "projective_dimension": pd, "depth": dep}
        if rep.regularity is not None:
            if (reg, pd, dep) != (rep.regularity, rep.projective_dimension, rep.depth):
                raise InvariantViolationError(
                    "formula-vs-oracle",
                    f"formula ({rep.regularity},{rep.projective_dimension},{rep.depth})"
                    f" oracle ({reg},{pd},{dep})")
            report["oracle"]["agrees"] = True
    order = ("classification", "c", "regularity", "depth", "projective_dimension",
             "coclique", "scc_count", "r_lower", "zeta", "reg_witness",
             "depth_witness", "notes")
    pairs = [(k, report[k]) for k in order if k in report]
    if "oracle" in report:
        o = report["oracle"]
        pairs.append(("oracle", f"reg {o['regularity']} projdim "
                                f"{o['projective_dimension']} depth {o['depth']} "
                                f"({o['field']})"))
    _emit(args, report, _kv_lines(pairs))
    return 0


# ------------------------------------------------------------------ primes

def cmd_primes(args):
    g = parse_graph(_load_doc(args.graph))
    primes = associated_primes(g)
    report = {
        "schema": SCHEMA,
        "classification": classify(g).value,
        "height": len(primes[0].x_labels) + len(primes[0].y_labels),
        "count": len(primes),
        "primes": [{"x": list(p.x_labels), "y": list(p.y_labels)} for p in primes],
    }
    lines = [f"height {report['height']}  primes {report['count']}"]
    for p in primes:
        lines.append("(" + ", ".join(list(p.x_labels) + list(p.y_labels)) + ")")
    _emit(args, report, "\n".join(lines))
    return 0


# -------------------------------------------------------------------- stci

def cmd_stci(args):
    g = parse_graph(_load_doc(args.graph))
    emb = None
    if args.embedding:
        mg = require_unmixed(g)
        emb = PlaneEmbedding.from_json(_load_doc(args.embedding), mg.c)
    gs = arank_generators(g, embedding=emb)
    report = gs.to_json()
    code = 0
    if args.verify:
        vrep = verify_arank_generators(g, gs, field=args.field,
                                       budget=args.gb_timeout)
        report["verification"] = vrep.to_json()
        if not vrep.verified:
            statuses = {c.status for c in vrep.checks}
            code = 5 if "timeout" in statuses else 6
    lines = [f"c {gs.c}  xi {gs.xi}  generators {gs.count}"]
    for t, s in enumerate(gs.strings(), start=1):
        kind = "g" if t <= len(gs.gens_g) else "h"
        idx = t if t <= len(gs.gens_g) else t - len(gs.gens_g)
        lines.append(f"{kind}{idx} = {s}")
    if gs.gamma is not None:
        lines.append("gamma  " + " ".join(str(v) for v in gs.gamma))
        lines.append("rho    " + " ".join(str(v) for v in gs.rho))
        lines.append(render_gamma(gs.gamma_graph))
    if args.verify:
        v = report["verification"]
        done = sum(1 for m in v["memberships"] if m["status"] == "verified")
        lines.append(f"verification {'ok' if v['verified'] else 'FAILED'} "
                     f"({done}/{len(v['memberships'])} memberships, "
                     f"gb {v['gb_seconds']}s, field {v['field']})")
    _emit(args, report, "\n".join(lines))
    return code


# ------------------------------------------------------------------ oracle

def cmd_oracle(args):
    g = parse_graph(_load_doc(args.graph))
    table = betti_table(edge_ideal_of_graph(g), field=args.field,
                        cap=args.max_oracle_vars)
    report = table.to_json()
    graded = table.graded()
    pd = table.projdim()
    maxj = max(j for _, j in graded)
    lines = [f"field {args.field}  reg {table.regularity()}  "
             f"projdim {pd}  depth {table.depth()}",
             "l\\j  " + "".join(f"{j:>5d}" for j in range(maxj + 1))]
    for l in range(pd + 1):
        row = "".join(f"{graded.get((l, j), '.'):>5}" for j in range(maxj + 1))
        lines.append(f"{l:>3d}  {row}")
    _emit(args, report, "\n".join(lines))
    return 0


# --------------------------------------------------------------------- gen

def cmd_gen(args):
    spec = GeneratorSpec.from_json(_load_doc(args.spec))
    if args.seed is not None:
        spec = GeneratorSpec(spec.mode, {**spec.params, "seed": args.seed})
    graphs = [to_document(mg.to_bipartite_graph()) for mg in run_spec(spec)]
    report = {"schema": SCHEMA, "mode": spec.mode,
              "count": len(graphs), "graphs": graphs}
    _emit(args, report, None)
    return 0


# ------------------------------------------------------------------- check

class _Tally:
    """Per-check pass/skip/fail bookkeeping for the cross-check suites."""

    def __init__(self, quiet):
        self.rows = {}
        self.quiet = quiet

    def add(self, check, instance, ok):
        row = self.rows.setdefault(check, {"passed": 0, "skipped": 0, "failures": []})
        if ok:
            row["passed"] += 1
        else:
            row["failures"].append(instance)
            if not self.quiet:
                print(f"FAIL {check} on {instance}", file=sys.stderr)

    def skip(self, check, instance):
        row = self.rows.setdefault(check, {"passed": 0, "skipped": 0, "failures": []})
        row["skipped"] += 1

    def report(self):
        checks = []
        for name, row in self.rows.items():
            checks.append({
                "name": name,
                "status": "fail" if row["failures"] else "pass",
                "passed": row["passed"],
                "skipped": row["skipped"],
                "failures": row["failures"][:20],
            })
        return checks

    def print_lines(self):
        for entry in self.report():
            extra = f", {entry['skipped']} skipped" if entry["skipped"] else ""
            fails = f", failures: {' '.join(entry['failures'][:5])}" \
                if entry["failures"] else ""
            print(f"{entry['status'].upper():4s} {entry['name']} "
                  f"({entry['passed']} instances{extra}{fails})")

    @property
    def ok(self):
        return all(not row["failures"] for row in self.rows.values())


def _random_instances(seed, count):
    """Seeded unmixed instances with mixed weights for the random suite."""
    out = []
    for k in range(count):
        t = 2 + k % 4
        c = t + (k % 3)
        dhat = random_poset(t, density=0.4, seed=seed + k)
        zeta = random_weights(t, c, seed=seed + 1000 + k)
        out.append((f"random-{seed + k}", expand_poset(dhat, zeta)))
    return out


def _instance_checks(tally, name, mg, args):
    d = mg.digraph()
    g = mg.to_bipartite_graph()
    reg, _ = regularity(d)
    dep, _ = depth(d)
    pd = projective_dimension(d)
    red = acyclic_reduction(d)

    if 2 * mg.c <= args.max_oracle_vars:
        oreg, opd, odep = oracle_invariants(edge_ideal(mg), field=args.field,
                                            cap=args.max_oracle_vars)
        tally.add("formula-vs-oracle", name, (oreg, opd, odep) == (reg, pd, dep))
    else:
        tally.skip("formula-vs-oracle", name)

    try:
        r = max_pairwise_disconnected(g).size
        tally.add("r-equals-reg", name, r == reg)
    except TooLargeError:
        tally.skip("r-equals-reg", name)

    tally.add("depth-lower-bound", name, dep >= len(red.components))

    try:
        covers = {(frozenset(c.left), frozenset(c.right))
                  for c in minimal_vertex_covers(g)}
        primes = {p.as_cover_pair() for p in associated_primes(g)}
        tally.add("associated-primes", name, primes == covers)
    except TooLargeError:
        tally.skip("associated-primes", name)

    if classify(g) is Classification.COHEN_MACAULAY and 2 * mg.c <= args.max_oracle_vars:
        tally.add("dual-shape", name, dual_shape_check(mg, field=args.field,
                                                       cap=args.max_oracle_vars))

    try:
        gs = arank_generators(mg)
    except NotTwoDimensionalError:
        tally.skip("arank-count", name)
        return
    # partition of the edge monomials is asserted inside arank_generators
    tally.add("arank-count", name, gs.count == pd)
    if mg.c <= args.radical_cap:
        vrep = verify_arank_generators(mg, gs, field=DEFAULT_FIELD,
                                       budget=args.gb_timeout)
        tally.add("radical-verification", name, vrep.verified)


def _gamma_suite(tally, args):
    for k in range(args.poset_samples):
        s = args.seed + k
        n = 2 + k % 9
        p, emb = random_2d_poset(n, seed=s)
        name = f"poset-{s}-n{n}"
        try:
            gamma = column_linearization(p, emb)
            rho = row_linearization(p, emb)
            check_linearizations(p, gamma, rho)
            build_gamma_graph(p, gamma, rho)  # raises on any structure violation
            tally.add("gamma-properties", name, True)
        except EdgeIdealError:
            tally.add("gamma-properties", name, False)


def _dual_suite(tally, args):
    for k in range(args.ideal_samples):
        s = args.seed + k
        nvars = 3 + k % 6
        ngens = 2 + k % 4
        ideal = random_squarefree_ideal(nvars, ngens, seed=s)
        name = f"ideal-{s}-n{nvars}"
        tally.add("terai", name, terai_check(ideal, field=args.field))
        tally.add("dual-betti-relation", name,
                  dual_betti_relation_check(ideal, field=args.field))


def _sharp_depth_suite(tally, args):
    for t, c in ((1, 2), (1, 3), (2, 3), (2, 4), (3, 5)):
        mg = sharp_depth_instance(t, c)
        name = f"sharp-t{t}-c{c}"
        dep, _ = depth(mg.digraph())
        ok = dep == t
        if 2 * c <= args.max_oracle_vars:
            _, _, odep = oracle_invariants(edge_ideal(mg), field=args.field,
                                           cap=args.max_oracle_vars)
            ok = ok and odep == t
        tally.add("depth-sharpness", name, ok)


def _reg_extremal_suite(tally, args):
    # regularity reaches c among Cohen-Macaulay graphs only without arcs
    for c in (1, 2, 3):
        for idx, mg in enumerate(enumerate_unmixed(c)):
            g = mg.to_bipartite_graph()
            if classify(g) is not Classification.COHEN_MACAULAY:
                continue
            reg, _ = regularity(mg.digraph())
            isolated = not mg.digraph().arcs
            tally.add("reg-equals-c-characterization", f"enum-c{c}-{idx}",
                      (reg == c) == isolated)


def _fault_drop_gamma_edge():
    g = parse_graph(_fixture("cm7.json"))
    gs = arank_generators(g)
    gg = gs.gamma_graph
    edges = list(gg.edges)
    dropped = edges.pop()
    parent = {pt: pt for pt, _ in gg.points}

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for a, b in edges:
        parent[find(a)] = find(b)
    count = len({find(pt) for pt, _ in gg.points})
    if count != gg.n:
        raise InvariantViolationError(
            "gamma-component-count",
            f"{count} components for n={gg.n} after dropping edge {dropped}")


def cmd_check(args):
    if args.inject_fault:
        if args.inject_fault != "drop-gamma-edge":
            raise ParseError(f"unknown fault {args.inject_fault!r}")
        try:
            _fault_drop_gamma_edge()
        except InvariantViolationError as e:
            report = {"schema": SCHEMA, "suite": "inject-fault", "ok": False,
                      "checks": [{"name": e.name, "status": "fail",
                                  "detail": str(e)}]}
            _emit(args, report, f"FAIL {e.name}: {e}")
            return 6
        report = {"schema": SCHEMA, "suite": "inject-fault", "ok": False,
                  "checks": [{"name": "fault-undetected", "status": "fail"}]}
        _emit(args, report, "FAIL fault-undetected: mutation not caught")
        return 6

    tally = _Tally(args.quiet)
    if args.suite == "default":
        instances = pinned_sweep()
    else:
        instances = _random_instances(args.seed, args.random_count)
    for name, mg in instances:
        _instance_checks(tally, name, mg, args)
    _sharp_depth_suite(tally, args)
    _reg_extremal_suite(tally, args)
    _gamma_suite(tally, args)
    _dual_suite(tally, args)

    report = {"schema": SCHEMA, "suite": args.suite, "seed": args.seed,
              "ok": tally.ok, "checks": tally.report()}
    if args.json:
        with open(args.json, "w") as fh:
            fh.write(json.dumps(report, indent=2) + "\n")
    if not args.quiet:
        if args.pretty:
            tally.print_lines()
            print("ok" if tally.ok else "FAILED")
        else:
            print(json.dumps(report, indent=2))
    return 0 if tally.ok else 6


# -------------------------------------------------------------- entrypoint

def _add_output_flags(sp):
    sp.add_argument("--json", metavar="PATH", help="also write the JSON report here")
    sp.add_argument("--pretty", action="store_true", help="aligned text output")
    sp.add_argument("--quiet", action="store_true", help="suppress stdout")


def build_parser():
    p = argparse.ArgumentParser(
        prog="edgeideal",
        description="Invariants and arithmetic-rank generator sets for edge "
                    "ideals of unmixed bipartite graphs, with brute-force "
                    "algebraic cross-checks.")
    sub = p.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("classify", help="matching, digraph, classification")
    sp.add_argument("graph", help="graph JSON: path, '-', or inline")
    _add_output_flags(sp)
    sp.set_defaults(func=cmd_classify)

    sp = sub.add_parser("invariants", help="regularity, depth, projdim by formula")
    sp.add_argument("graph")
    sp.add_argument("--oracle", action="store_true",
                    help="cross-check against the homology oracle")
    sp.add_argument("--field", default="q", help="q or p:<prime> (default q)")
    sp.add_argument("--max-oracle-vars", type=int, default=BETTI_CAP)
    _add_output_flags(sp)
    sp.set_defaults(func=cmd_invariants)

    sp = sub.add_parser("primes", help="associated primes of the edge ideal")
    sp.add_argument("graph")
    _add_output_flags(sp)
    sp.set_defaults(func=cmd_primes)

    sp = sub.add_parser("stci", help="arithmetic-rank generator set")
    sp.add_argument("graph")
    sp.add_argument("--embedding", metavar="PATH",
                    help="plane embedding JSON overriding the search")
    sp.add_argument("--verify", action="store_true",
                    help="radical-membership verification of the output")
    sp.add_argument("--field", default=DEFAULT_FIELD,
                    help=f"verification field (default {DEFAULT_FIELD})")
    sp.add_argument("--gb-timeout", type=float, default=DEFAULT_BUDGET,
                    metavar="SEC", help="budget per Groebner run")
    _add_output_flags(sp)
    sp.set_defaults(func=cmd_stci)

    sp = sub.add_parser("oracle", help="multigraded Betti table by homology")
    sp.add_argument("graph")
    sp.add_argument("--field", default="q")
    sp.add_argument("--max-oracle-vars", type=int, default=BETTI_CAP)
    _add_output_flags(sp)
    sp.set_defaults(func=cmd_oracle)

    sp = sub.add_parser("gen", help="emit instances from a generator spec")
    sp.add_argument("spec", help="spec JSON: path, '-', or inline")
    sp.add_argument("--seed", type=int, default=None)
    _add_output_flags(sp)
    sp.set_defaults(func=cmd_gen)

    sp = sub.add_parser("check", help="cross-oracle property suites")
    sp.add_argument("--suite", choices=("default", "random"), default="default")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--field", default="q")
    sp.add_argument("--max-oracle-vars", type=int, default=BETTI_CAP)
    sp.add_argument("--gb-timeout", type=float, default=DEFAULT_BUDGET)
    sp.add_argument("--radical-cap", type=int, default=3,
                    help="radical-verify instances with c up to this")
    sp.add_argument("--random-count", type=int, default=20)
    sp.add_argument("--poset-samples", type=int, default=500)
    sp.add_argument("--ideal-samples", type=int, default=100)
    sp.add_argument("--inject-fault", metavar="NAME",
                    help="negative control; only drop-gamma-edge")
    _add_output_flags(sp)
    sp.set_defaults(func=cmd_check)
    return p


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, TooLargeError, InvalidEmbeddingError, CoordinateTieError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except NotUnmixedError as e:
        print(f"error: not unmixed: {e}", file=sys.stderr)
        return 3
    except NotTwoDimensionalError as e:
        print(f"error: {e}", file=sys.stderr)
        return 4
    except GroebnerTimeoutError as e:
        print(f"error: {e}", file=sys.stderr)
        return 5
    except InvariantViolationError as e:
        print(f"error: {e}", file=sys.stderr)
        return 6


if __name__ == "__main__":
    sys.exit(main())
