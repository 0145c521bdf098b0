"""Graph metric repair: make every edge a shortest path with few weight edits.

An instance is a weighted graph (or a full distance matrix) whose weights may
have been corrupted.  The goal is a minimum-cardinality set of edge-weight
modifications -- decreases only, increases only, or arbitrary -- after which no
cycle has an edge strictly heavier than the rest of the cycle.

The public surface groups into:

* data model: :class:`WeightedGraph`, :class:`DistanceMatrix`,
  :class:`RepairDelta`, :class:`OmegaClass`, :func:`apply_delta`
* detection: :func:`is_metric`, :func:`find_broken_witness`,
  :func:`broken_triangles`, :func:`longest_broken_cycle_len`
* exact solvers: :func:`decrease_repair`, :func:`verify_support`,
  :func:`brute_force_opt`, :func:`minimum_cycle_cover`
* fixed-parameter solvers (chordal graphs): :func:`fpt_increase`,
  :func:`fpt_general`, :func:`fpt_min_repair`
* approximations: :func:`shortest_path_cover`,
  :func:`general_shortest_path_cover`, :func:`five_cycle_cover`,
  :func:`matrix_sweep_repair`
* instance generators in :mod:`metric_repair.gadgets` and the uniform
  dispatcher :func:`run_algo`.
"""

from .approx import (
    ApproxReport,
    SupportRejectedError,
    five_cycle_cover,
    general_shortest_path_cover,
    matrix_sweep_repair,
    repaired_cell_count,
    shortest_path_cover,
)
from .chordal import is_chordal, perfect_elimination_ordering
from .detect import (
    broken_cycles,
    broken_triangles,
    find_broken_witness,
    instance_stats,
    is_metric,
    longest_broken_cycle_len,
    simple_cycles,
)
from .exact import (
    RejectionReason,
    VerifierOutcome,
    covers_broken_cycles,
    decrease_repair,
    normalize_support,
    verify_support,
)
from .fpt import FptResult, fpt_general, fpt_increase, fpt_min_repair
from .graphs import (
    BrokenCycleWitness,
    DistanceMatrix,
    EnumerationBudgetError,
    InputFormatError,
    InstanceStats,
    MetricRepairError,
    OmegaClass,
    PreconditionError,
    RepairDelta,
    WeightedGraph,
    apply_delta,
    as_weight,
    edge_key,
)
from .oracle import all_optimal_supports, brute_force_opt, minimum_cycle_cover
from .paths import ApspResult, apsp
from .runner import NoSolutionError, RepairReport, run_algo

__all__ = [
    "ApproxReport",
    "ApspResult",
    "BrokenCycleWitness",
    "DistanceMatrix",
    "EnumerationBudgetError",
    "FptResult",
    "InputFormatError",
    "InstanceStats",
    "MetricRepairError",
    "NoSolutionError",
    "OmegaClass",
    "PreconditionError",
    "RejectionReason",
    "RepairDelta",
    "RepairReport",
    "SupportRejectedError",
    "VerifierOutcome",
    "WeightedGraph",
    "all_optimal_supports",
    "apply_delta",
    "apsp",
    "as_weight",
    "broken_cycles",
    "broken_triangles",
    "brute_force_opt",
    "covers_broken_cycles",
    "decrease_repair",
    "edge_key",
    "find_broken_witness",
    "five_cycle_cover",
    "fpt_general",
    "fpt_increase",
    "fpt_min_repair",
    "general_shortest_path_cover",
    "instance_stats",
    "is_chordal",
    "is_metric",
    "longest_broken_cycle_len",
    "matrix_sweep_repair",
    "minimum_cycle_cover",
    "normalize_support",
    "perfect_elimination_ordering",
    "repaired_cell_count",
    "run_algo",
    "shortest_path_cover",
    "simple_cycles",
    "verify_support",
]

__version__ = "0.1.0"
