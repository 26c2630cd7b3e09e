"""Graph parsing and the brute-force cover/matching oracles."""
import itertools

import numpy as np
import pytest

from edgeideal.errors import (
    DuplicateEdgeError,
    EmptyGraphError,
    IsolatedVertexError,
    SchemaError,
    TooLargeError,
    UnknownLabelError,
)
from edgeideal.graphs import (
    BipartiteGraph,
    dumps_graph,
    height,
    is_unmixed_oracle,
    max_pairwise_disconnected,
    minimal_vertex_covers,
    parse_graph,
    to_document,
)


def test_parse_sorts_labels_and_round_trips():
    doc = {"left": ["b", "a"], "right": ["y", "x"],
           "edges": [["b", "x"], ["a", "y"], ["a", "x"]]}
    g = parse_graph(doc)
    assert g.left == ("a", "b") and g.right == ("x", "y")
    assert g.label_edges() == [("a", "x"), ("a", "y"), ("b", "x")]
    assert parse_graph(to_document(g)) == g
    assert parse_graph(dumps_graph(g)) == g


def test_parse_accepts_json_text():
    g = parse_graph('{"left": ["a"], "right": ["x"], "edges": [["a", "x"]]}')
    assert g.n_left == 1 and g.n_right == 1


def test_parse_error_paths():
    with pytest.raises(SchemaError):
        parse_graph("{not json")
    with pytest.raises(SchemaError):
        parse_graph([1, 2])
    with pytest.raises(SchemaError):
        parse_graph({"left": ["a"], "right": ["x"]})
    with pytest.raises(SchemaError):
        parse_graph({"left": "a", "right": ["x"], "edges": []})
    with pytest.raises(SchemaError):
        parse_graph({"left": [1], "right": ["x"], "edges": []})
    with pytest.raises(SchemaError):
        parse_graph({"left": ["a", "a"], "right": ["x"], "edges": [["a", "x"]]})
    with pytest.raises(EmptyGraphError):
        parse_graph({"left": ["a"], "right": ["x"], "edges": []})
    with pytest.raises(SchemaError):
        parse_graph({"left": ["a"], "right": ["x"], "edges": [["a"]]})
    with pytest.raises(UnknownLabelError) as exc:
        parse_graph({"left": ["a"], "right": ["x"], "edges": [["q", "x"]]})
    assert exc.value.label == "q" and exc.value.side == "left"
    with pytest.raises(DuplicateEdgeError):
        parse_graph({"left": ["a"], "right": ["x"],
                     "edges": [["a", "x"], ["a", "x"]]})
    with pytest.raises(IsolatedVertexError) as exc:
        parse_graph({"left": ["a", "b"], "right": ["x"], "edges": [["a", "x"]]})
    assert exc.value.label == "b"


def random_bipartite(rng, nl, nr):
    """Random bipartite graph where every vertex keeps at least one edge."""
    while True:
        edges = {(l, r) for l in range(nl) for r in range(nr)
                 if rng.random() < 0.45}
        if all(any(l == a for a, _ in edges) for l in range(nl)) and \
           all(any(r == b for _, b in edges) for r in range(nr)):
            left = tuple(f"x{k + 1}" for k in range(nl))
            right = tuple(f"y{k + 1}" for k in range(nr))
            return BipartiteGraph(left, right, frozenset(edges))


def brute_minimal_covers(g):
    verts = [("L", l) for l in range(g.n_left)] + [("R", r) for r in range(g.n_right)]
    covers = []
    for bits in range(1 << len(verts)):
        chosen = {verts[k] for k in range(len(verts)) if (bits >> k) & 1}
        if all(("L", l) in chosen or ("R", r) in chosen for l, r in g.edges):
            covers.append(chosen)
    minimal = [c for c in covers if not any(o < c for o in covers)]
    out = set()
    for c in minimal:
        out.add((frozenset(g.left[v] for s, v in c if s == "L"),
                 frozenset(g.right[v] for s, v in c if s == "R")))
    return out


def test_minimal_vertex_covers_against_brute_force():
    rng = np.random.default_rng(41)
    for _ in range(30):
        g = random_bipartite(rng, int(rng.integers(1, 4)), int(rng.integers(1, 4)))
        got = {(frozenset(c.left), frozenset(c.right))
               for c in minimal_vertex_covers(g)}
        assert got == brute_minimal_covers(g)


def test_minimal_vertex_covers_k22(k22):
    got = {(frozenset(c.left), frozenset(c.right))
           for c in minimal_vertex_covers(k22)}
    assert got == {(frozenset({"x1", "x2"}), frozenset()),
                   (frozenset(), frozenset({"y1", "y2"}))}
    assert height(k22) == 2
    assert is_unmixed_oracle(k22)


def test_unmixedness_oracle_known_cases(cm7, cycle8):
    assert is_unmixed_oracle(cm7)
    assert not is_unmixed_oracle(cycle8)
    star = parse_graph({"left": ["a"], "right": ["x", "y"],
                        "edges": [["a", "x"], ["a", "y"]]})
    assert not is_unmixed_oracle(star)


def brute_max_disconnected(g):
    edges = g.label_edges()
    eset = set(edges)
    best = 0
    for k in range(len(edges), 0, -1):
        for combo in itertools.combinations(edges, k):
            ok = True
            for (a, b), (c, d) in itertools.combinations(combo, 2):
                if a == c or b == d or (a, d) in eset or (c, b) in eset:
                    ok = False
                    break
            if ok:
                return k
    return best


def test_max_pairwise_disconnected_known_and_random(k22, cycle8, cm7):
    assert max_pairwise_disconnected(k22).size == 1
    assert max_pairwise_disconnected(cycle8).size == 2
    assert max_pairwise_disconnected(cm7).size == 3
    rng = np.random.default_rng(43)
    for _ in range(25):
        g = random_bipartite(rng, int(rng.integers(1, 4)), int(rng.integers(1, 4)))
        ds = max_pairwise_disconnected(g)
        assert ds.size == brute_max_disconnected(g)
        # witness is itself pairwise disconnected
        eset = set(g.label_edges())
        for (a, b), (c, d) in itertools.combinations(ds.edges, 2):
            assert a != c and b != d
            assert (a, d) not in eset and (c, b) not in eset


def test_caps_raise():
    left = tuple(f"x{k}" for k in range(13))
    right = tuple(f"y{k}" for k in range(13))
    edges = frozenset((k, k) for k in range(13))
    g = BipartiteGraph(left, right, edges)
    with pytest.raises(TooLargeError):
        minimal_vertex_covers(g)
    with pytest.raises(TooLargeError):
        max_pairwise_disconnected(g, cap=5)
    assert max_pairwise_disconnected(g, cap=None).size == 13
