"""Exact and randomized tools for 3D rigidity matroids: rings, covers and constructions."""

from .graph import Graph, GraphError, build_graph, complete_graph, pair
from .linalg import PRIME
from .oracle import (
    COFACTOR,
    DEFAULT_SEED,
    GENERIC3D,
    Framework,
    MatroidModel,
    RankCertificate,
    RankOracle,
    classify_triple,
    closure,
    flex_basis,
    flex_dim,
    generic_rank,
    implied_nonedge,
    implied_nonedges,
    independence,
    is_circuit,
    is_independent,
    is_nucleation_free,
    is_rigid,
    nucleations,
    stress_basis,
)
from .covers import TwoThinCover, ie_count, rank_sandwich, validate_two_thin
from .catalog import named_framework, named_graph

__version__ = "0.1.0"

__all__ = [
    "Graph", "GraphError", "build_graph", "complete_graph", "pair", "PRIME",
    "COFACTOR", "DEFAULT_SEED", "GENERIC3D", "Framework", "MatroidModel", "RankCertificate", "RankOracle",
    "classify_triple", "closure", "flex_basis", "flex_dim", "generic_rank", "implied_nonedge",
    "implied_nonedges", "independence", "is_circuit", "is_independent", "is_nucleation_free", "is_rigid",
    "nucleations", "stress_basis", "TwoThinCover", "ie_count", "rank_sandwich", "validate_two_thin",
    "named_framework", "named_graph",
]
