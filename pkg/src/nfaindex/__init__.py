"""State orderings of NFAs for index data structures.

The package computes and verifies the objects behind BWT-style
indexability of automata: forward-stable partitions and their quotients,
maximum co-lexicographic relations and orders, the coarsest-forward-stable
co-lex order, quasi-Wheeler detection, and Dilworth widths with antichain
and chain-cover certificates.
"""

from .automaton import (
    HASH,
    Nfa,
    delta_string,
    gen_fixture,
    gen_random,
    gen_separation_family,
    label_key,
    lambda_leq,
    parse_nfa,
    serialize_nfa,
    to_dot,
)
from .colex import (
    CompareReport,
    PairGraph,
    cfs_order,
    compare_report,
    is_quasi_wheeler,
    max_colex_order,
    max_colex_relation,
    preceding_pairs_oracle,
    source_distances,
)
from .errors import (
    EqualPair,
    InternalInvariantViolation,
    InvalidParameter,
    NfaIndexError,
    NfaSyntaxError,
    NotPreorder,
    PartitionMismatch,
    QuotientInvalid,
    SizeMismatch,
    TooLarge,
    UnknownFixture,
    UnknownLabel,
    ValidationError,
)
from .fs_partition import (
    FsViolation,
    Partition,
    QuotientMap,
    build_quotient,
    coarsest_fs_partition,
    is_forward_stable,
)
from .oracle import (
    brute_coarsest_fs,
    brute_max_colex_relation,
    brute_width,
    enumerate_fs_partitions,
    reach_sets,
)
from .relations import (
    Relation,
    Violation,
    WidthCertificate,
    check_colex_order,
    check_colex_relation,
    check_wheeler_order,
    check_wheeler_preorder,
    induced_equivalence,
    induced_order,
    relation_from_json_dict,
    relation_to_json_dict,
    width,
)

__version__ = "0.1.0"

__all__ = [
    "HASH",
    "Nfa",
    "delta_string",
    "gen_fixture",
    "gen_random",
    "gen_separation_family",
    "label_key",
    "lambda_leq",
    "parse_nfa",
    "serialize_nfa",
    "to_dot",
    "CompareReport",
    "PairGraph",
    "cfs_order",
    "compare_report",
    "is_quasi_wheeler",
    "max_colex_order",
    "max_colex_relation",
    "preceding_pairs_oracle",
    "source_distances",
    "EqualPair",
    "InternalInvariantViolation",
    "InvalidParameter",
    "NfaIndexError",
    "NfaSyntaxError",
    "NotPreorder",
    "PartitionMismatch",
    "QuotientInvalid",
    "SizeMismatch",
    "TooLarge",
    "UnknownFixture",
    "UnknownLabel",
    "ValidationError",
    "FsViolation",
    "Partition",
    "QuotientMap",
    "build_quotient",
    "coarsest_fs_partition",
    "is_forward_stable",
    "brute_coarsest_fs",
    "brute_max_colex_relation",
    "brute_width",
    "enumerate_fs_partitions",
    "reach_sets",
    "Relation",
    "Violation",
    "WidthCertificate",
    "check_colex_order",
    "check_colex_relation",
    "check_wheeler_order",
    "check_wheeler_preorder",
    "induced_equivalence",
    "induced_order",
    "relation_from_json_dict",
    "relation_to_json_dict",
    "width",
]
