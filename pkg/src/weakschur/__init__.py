"""weakschur: construct, certify, and search weak and strong Schur partitions.

A strong partition splits [1, n] into subsets with no solution of
a + b = c inside any subset (a == b included); a weak partition only
rules out triples of three distinct members.  This package grows weak
partitions from strong seeds via fixed translate/tail constructions,
certifies arbitrary partitions against either definition, and recovers
small maximal orders by exhaustive backtracking search.
"""

from .construct import (
    ChainError,
    ChainResult,
    ChainStage,
    ConstructionError,
    RatioEntry,
    extend_strong_3m1,
    extend_weak_13m8,
    extend_weak_4m2,
    growth_ratios,
    run_chain,
)
from .core import (
    ChainSchedule,
    Kind,
    Partition,
    PartitionError,
    Rule,
    VerificationReport,
    Violation,
    WeakPair,
    make_partition,
)
from .files import (
    FormatError,
    PartitionDocument,
    format_partition,
    parse_partition,
    read_document,
)
from .search import (
    DEFAULT_BUDGET,
    SearchBudget,
    SearchBudgetExceeded,
    SearchResult,
    enumerate_all_max,
    search_max,
)
from .verify import (
    brute_force_check,
    check_subset,
    enumerate_weak_pairs,
    verify_partition,
)

__version__ = "0.1.0"

__all__ = [
    "ChainError",
    "ChainResult",
    "ChainSchedule",
    "ChainStage",
    "ConstructionError",
    "DEFAULT_BUDGET",
    "FormatError",
    "Kind",
    "Partition",
    "PartitionDocument",
    "PartitionError",
    "RatioEntry",
    "Rule",
    "SearchBudget",
    "SearchBudgetExceeded",
    "SearchResult",
    "VerificationReport",
    "Violation",
    "WeakPair",
    "brute_force_check",
    "check_subset",
    "enumerate_all_max",
    "enumerate_weak_pairs",
    "extend_strong_3m1",
    "extend_weak_13m8",
    "extend_weak_4m2",
    "format_partition",
    "growth_ratios",
    "make_partition",
    "parse_partition",
    "read_document",
    "run_chain",
    "search_max",
    "verify_partition",
]
