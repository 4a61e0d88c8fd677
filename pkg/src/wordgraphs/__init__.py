"""Digraphs encoded by words: construction, connectivity, synthesis, counting."""

from .connectivity import (
    Condensation,
    EmptyGraphError,
    SccDecomposition,
    bridges,
    condensation,
    edge_connectivity,
    scc_decomposition,
    strongly_connected,
    weakly_connected,
)
from .counting import (
    CapExceededError,
    ComponentMismatchError,
    CountTable,
    bell,
    brute_force_strong_count,
    csv_lines,
    family_cardinality,
    scc_histogram,
    stirling2,
    strong_partition_count,
    strong_word_count,
)
from .factorization import (
    DisjointFactorization,
    finest_disjoint_factorization,
    is_irreducible,
    split_points,
)
from .graphs import (
    Digraph,
    InvalidGraphError,
    WordGraph,
    build_graph,
    from_json,
    letter_labeled,
    relabel,
    to_dot,
    to_json,
)
from .represent import (
    NotRepresentableError,
    NotStronglyConnectedError,
    covering_walk,
    is_representable,
    representational_walk,
    synthesize_word,
)
from .verify import VerificationReport, run_verification
from .words import (
    EmptyWordError,
    InvalidPartitionError,
    InvalidWordError,
    SetPartition,
    Word,
    canonicalize,
    iter_canonical_words,
    parse_word,
    partition_to_word,
    symbol_name,
    word_to_partition,
)

__version__ = "0.1.0"

__all__ = [
    "Condensation",
    "EmptyGraphError",
    "SccDecomposition",
    "bridges",
    "condensation",
    "edge_connectivity",
    "scc_decomposition",
    "strongly_connected",
    "weakly_connected",
    "CapExceededError",
    "ComponentMismatchError",
    "CountTable",
    "bell",
    "brute_force_strong_count",
    "csv_lines",
    "family_cardinality",
    "scc_histogram",
    "stirling2",
    "strong_partition_count",
    "strong_word_count",
    "DisjointFactorization",
    "finest_disjoint_factorization",
    "is_irreducible",
    "split_points",
    "Digraph",
    "InvalidGraphError",
    "WordGraph",
    "build_graph",
    "from_json",
    "letter_labeled",
    "relabel",
    "to_dot",
    "to_json",
    "NotRepresentableError",
    "NotStronglyConnectedError",
    "covering_walk",
    "is_representable",
    "representational_walk",
    "synthesize_word",
    "VerificationReport",
    "run_verification",
    "EmptyWordError",
    "InvalidPartitionError",
    "InvalidWordError",
    "SetPartition",
    "Word",
    "canonicalize",
    "iter_canonical_words",
    "parse_word",
    "partition_to_word",
    "symbol_name",
    "word_to_partition",
]
