"""Collatz orbit statistics and odd-number structure.

Core maps and stopping times, parity-fraction scans with distribution
fitting, predecessor-tree enumeration, and verified generators for
strictly increasing odd runs.
"""

from .cache import StoppingCache
from .core import (
    DEFAULT_STEP_CAP,
    FAST_MAX,
    StoppingResult,
    Trajectory,
    collatz_step,
    next_odd_distance,
    odd_step,
    total_stopping_time,
    trajectory,
    two_adic_valuation,
)
from .errors import (
    FixedWidthOverflowError,
    InsufficientBinsError,
    SequenceVerificationError,
    StepCapError,
)
from .parity import (
    DEFAULT_BIN_COUNT,
    DEFAULT_FIT_WINDOW,
    Histogram,
    PowerLawFit,
    TrajectoryRecord,
    histogram,
    max_p_odd,
    p_odd,
    parity_sequence,
    power_law_fit,
    scan_range,
)
from .sequences import (
    MultiplierDecision,
    QSequence,
    RunReport,
    RunSeed,
    canonical_multipliers,
    n_table_csv,
    n_terms,
    q_sequence,
    run_seed,
    validate_multiplier,
    verify_increasing_run,
)
from .tree import (
    OddClass,
    OddKind,
    OddTreeNode,
    RootsReport,
    build_tree,
    classify,
    consistent_edges,
    predecessors_direct,
    predecessors_formula,
    predecessors_upto,
    smaller_predecessor,
    tree_to_dict,
    tree_to_dot,
    tree_to_json,
    verify_roots,
)

__version__ = "0.1.0"

__all__ = [
    "DEFAULT_BIN_COUNT",
    "DEFAULT_FIT_WINDOW",
    "DEFAULT_STEP_CAP",
    "FAST_MAX",
    "FixedWidthOverflowError",
    "Histogram",
    "InsufficientBinsError",
    "MultiplierDecision",
    "OddClass",
    "OddKind",
    "OddTreeNode",
    "PowerLawFit",
    "QSequence",
    "RootsReport",
    "RunReport",
    "RunSeed",
    "SequenceVerificationError",
    "StepCapError",
    "StoppingCache",
    "StoppingResult",
    "Trajectory",
    "TrajectoryRecord",
    "build_tree",
    "canonical_multipliers",
    "classify",
    "collatz_step",
    "consistent_edges",
    "histogram",
    "max_p_odd",
    "n_table_csv",
    "n_terms",
    "next_odd_distance",
    "odd_step",
    "p_odd",
    "parity_sequence",
    "power_law_fit",
    "predecessors_direct",
    "predecessors_formula",
    "predecessors_upto",
    "q_sequence",
    "run_seed",
    "scan_range",
    "smaller_predecessor",
    "total_stopping_time",
    "trajectory",
    "tree_to_dict",
    "tree_to_dot",
    "tree_to_json",
    "two_adic_valuation",
    "validate_multiplier",
    "verify_increasing_run",
    "verify_roots",
]
