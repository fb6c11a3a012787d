"""Exact classification of singularities of p-cyclic quotient varieties.

Given a prime p and the indecomposable decomposition of a linear action of
the cyclic group of order p in characteristic p, this package computes the
shift numbers of ramification jumps, the minimal discrepancy over the
singular locus, the terminal / canonical / log canonical status and the
Cohen-Macaulay flag, all in exact integer and rational arithmetic, and can
enumerate and search every representation type in a dimension range.
"""

from .discrepancy import (
    KLASS_CANONICAL_STRICT,
    KLASS_LOG_CANONICAL_STRICT,
    KLASS_NOT_LOG_CANONICAL,
    KLASS_SMOOTH,
    KLASS_TERMINAL,
    KLASSES,
    NEG_INF,
    SMOOTH,
    CenterBounds,
    Discrepancy,
    SingularityReport,
    center_discrepancy_bounds,
    classify,
    discrepancy,
    discrepancy_bounds,
    discrepancy_via_strata,
    klass_from_discrepancy,
    klass_from_weight,
)
from .errors import (
    CapExceededError,
    DivisibleJumpError,
    EmptyPartsError,
    EnumerationCapError,
    InternalInconsistencyError,
    NotPrimeError,
    PartExceedsPrimeError,
    PartNotPositiveError,
    PrimeRangeError,
    ProfileCapError,
    PsingError,
    RepSyntaxError,
    ValidationError,
)
from .explorer import (
    DEFAULT_PARTITION_CAP,
    Predicate,
    SearchQuery,
    TableRow,
    build_table,
    count_partitions,
    enumerate_reps,
    run_search,
)
from .rep import (
    Invariants,
    Representation,
    format_parts,
    invariants,
    is_prime,
    parse_parts_text,
    parse_representation,
    rep_from_text,
)
from .shift import (
    PROFILE_MAX_P,
    JumpIndex,
    ShiftProfile,
    floor_sum,
    shift_number,
    shift_profile,
    shift_reflection_holds,
    shift_upper_bound_holds,
    split_jump,
    stratum_dim,
)
from .verify import PROPERTY_NAMES, PropertyResult, run_property_suite

__version__ = "0.1.0"

__all__ = [
    "CapExceededError",
    "CenterBounds",
    "DEFAULT_PARTITION_CAP",
    "Discrepancy",
    "DivisibleJumpError",
    "EmptyPartsError",
    "EnumerationCapError",
    "InternalInconsistencyError",
    "Invariants",
    "JumpIndex",
    "KLASSES",
    "KLASS_CANONICAL_STRICT",
    "KLASS_LOG_CANONICAL_STRICT",
    "KLASS_NOT_LOG_CANONICAL",
    "KLASS_SMOOTH",
    "KLASS_TERMINAL",
    "NEG_INF",
    "NotPrimeError",
    "PROFILE_MAX_P",
    "PROPERTY_NAMES",
    "PartExceedsPrimeError",
    "PartNotPositiveError",
    "Predicate",
    "PrimeRangeError",
    "ProfileCapError",
    "PropertyResult",
    "PsingError",
    "RepSyntaxError",
    "Representation",
    "SMOOTH",
    "SearchQuery",
    "ShiftProfile",
    "SingularityReport",
    "TableRow",
    "ValidationError",
    "build_table",
    "center_discrepancy_bounds",
    "classify",
    "count_partitions",
    "discrepancy",
    "discrepancy_bounds",
    "discrepancy_via_strata",
    "enumerate_reps",
    "floor_sum",
    "format_parts",
    "invariants",
    "is_prime",
    "klass_from_discrepancy",
    "klass_from_weight",
    "parse_parts_text",
    "parse_representation",
    "rep_from_text",
    "run_property_suite",
    "run_search",
    "shift_number",
    "shift_profile",
    "shift_reflection_holds",
    "shift_upper_bound_holds",
    "split_jump",
    "stratum_dim",
]
