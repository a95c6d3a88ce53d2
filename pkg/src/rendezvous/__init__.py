"""Workbench for primitive sets of NZ boolean matrices.

Core quantities: the exponent (shortest entrywise-positive product), the
k-rendezvous time (shortest product with a row or column of weight k),
reset thresholds of the associated automata, and exact-rational upper
bound tables with their supporting witness constructions.
"""

from .boolmat import BoolMatrix, MatrixSet, WeightProfile, bits
from .bounds import (
    EscapeEvaluation,
    EscapeWitness,
    ScanReport,
    bound_b_closed,
    bound_b_recursive,
    bound_f,
    bound_f_table,
    build_witness,
    conjectured_equality_onset,
    escape_lower,
    escape_lower_refined,
    escape_upper,
    evaluate_escape,
    lift_bound,
    scan_conjectures,
    szykula_bound,
)
from .automata import (
    Automaton,
    KrtEqualityReport,
    SandwichReport,
    SubsetBfsResult,
    associated_automaton,
    raw_letter_count,
    subset_bfs,
    verify_krt_equality,
    verify_sandwich,
)
from .builtins import BUILTIN_NAMES, builtin_set, cpr_set, example_set, kari_set
from .errors import (
    DimensionError,
    LetterCapError,
    NonNZError,
    NotPrimitiveError,
    SearchLimitError,
    SetFileError,
    UnreachableVertexError,
    WorkbenchError,
)
from .heuristic import HeuristicTrace, run_heuristic
from .pairgraph import (
    DistanceTable,
    MergingWord,
    PairDigraph,
    PrimitivityReport,
    build_pair_digraph,
    check_primitivity,
    is_primitive,
    merging_word,
    pair_vertices,
    singleton_distances,
)
from .semigroup import Reach, SearchResult, default_max_depth, explore, witness_replay
from .setfile import parse_set_file, parse_set_text, serialize_set

__all__ = [
    "BoolMatrix",
    "MatrixSet",
    "WeightProfile",
    "bits",
    "Automaton",
    "SubsetBfsResult",
    "SandwichReport",
    "KrtEqualityReport",
    "associated_automaton",
    "raw_letter_count",
    "subset_bfs",
    "verify_sandwich",
    "verify_krt_equality",
    "EscapeEvaluation",
    "EscapeWitness",
    "ScanReport",
    "bound_b_closed",
    "bound_b_recursive",
    "bound_f",
    "bound_f_table",
    "build_witness",
    "conjectured_equality_onset",
    "escape_lower",
    "escape_lower_refined",
    "escape_upper",
    "evaluate_escape",
    "lift_bound",
    "scan_conjectures",
    "szykula_bound",
    "BUILTIN_NAMES",
    "builtin_set",
    "example_set",
    "cpr_set",
    "kari_set",
    "WorkbenchError",
    "DimensionError",
    "NonNZError",
    "LetterCapError",
    "UnreachableVertexError",
    "NotPrimitiveError",
    "SearchLimitError",
    "SetFileError",
    "HeuristicTrace",
    "run_heuristic",
    "PairDigraph",
    "PrimitivityReport",
    "DistanceTable",
    "MergingWord",
    "build_pair_digraph",
    "check_primitivity",
    "is_primitive",
    "merging_word",
    "pair_vertices",
    "singleton_distances",
    "Reach",
    "SearchResult",
    "default_max_depth",
    "explore",
    "witness_replay",
    "parse_set_file",
    "parse_set_text",
    "serialize_set",
]
