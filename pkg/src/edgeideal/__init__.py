"""Edge ideals of unmixed bipartite graphs: invariants from directed-graph
combinatorics, checked against brute-force algebraic oracles, and
arithmetic-rank generator sets built from plane embeddings."""

from .digraph import DirectedGraph
from .embedding import PlaneEmbedding, canonicalize, embed_poset_2d, validate_embedding
from .graphs import (
    BipartiteGraph,
    is_unmixed_oracle,
    max_pairwise_disconnected,
    minimal_vertex_covers,
    parse_graph,
    to_document,
)
from .invariants import depth, invariants_report, projective_dimension, regularity
from .matching import (
    Classification,
    MatchedBipartiteGraph,
    acyclic_reduction,
    associated_primes,
    build_digraph,
    classify,
    find_perfect_matching,
)
from .stci import arank_generators
from .verify import verify_arank_generators

__version__ = "0.1.0"

__all__ = [
    "BipartiteGraph",
    "Classification",
    "DirectedGraph",
    "MatchedBipartiteGraph",
    "PlaneEmbedding",
    "acyclic_reduction",
    "arank_generators",
    "associated_primes",
    "build_digraph",
    "canonicalize",
    "classify",
    "depth",
    "embed_poset_2d",
    "find_perfect_matching",
    "invariants_report",
    "is_unmixed_oracle",
    "max_pairwise_disconnected",
    "minimal_vertex_covers",
    "parse_graph",
    "projective_dimension",
    "regularity",
    "to_document",
    "validate_embedding",
    "verify_arank_generators",
]
