"""Uniform solver dispatch with timing and validity checks."""

from __future__ import annotations

import time
from dataclasses import dataclass

from .approx import (
    five_cycle_cover,
    general_shortest_path_cover,
    matrix_sweep_repair,
    repaired_cell_count,
    shortest_path_cover,
)
from .detect import instance_stats, is_metric
from .exact import decrease_repair
from .fpt import fpt_min_repair
from .graphs import (
    DistanceMatrix,
    MetricRepairError,
    OmegaClass,
    PreconditionError,
    RepairDelta,
    WeightedGraph,
    apply_delta,
)
from .oracle import brute_force_opt

ALGORITHMS = ("dmr", "fpt", "spc", "gspc", "5cc", "iomr", "oracle")

ALGO_OMEGAS = {
    "dmr": (OmegaClass.DECREASE_ONLY,),
    "spc": (OmegaClass.INCREASE_ONLY,),
    "5cc": (OmegaClass.INCREASE_ONLY,),
    "iomr": (OmegaClass.INCREASE_ONLY,),
    "gspc": (OmegaClass.INCREASE_ONLY, OmegaClass.GENERAL),
    "fpt": (OmegaClass.INCREASE_ONLY, OmegaClass.GENERAL),
    "oracle": (OmegaClass.DECREASE_ONLY, OmegaClass.INCREASE_ONLY, OmegaClass.GENERAL),
}

_MATRIX_ONLY = ("5cc", "iomr")


class NoSolutionError(MetricRepairError):
    """The requested algorithm found no repair within its budget."""


@dataclass
class RepairReport:
    """One solver run: solution, size facts and timing."""

    algo: str
    omega: OmegaClass
    n: int
    m: int
    delta: RepairDelta
    support_size: int
    time_ms: float
    iterations: int | None = None
    repaired_cells: int | None = None
    longest_broken_cycle: int | None = None
    valid: bool = False


def run_algo(instance, omega: OmegaClass, algo: str,
             exact_cycle_budget: int | None = None,
             oracle_edge_limit: int | None = None) -> RepairReport:
    """Dispatch one solver, validate its output and time the solve.

    ``instance`` is a WeightedGraph or a DistanceMatrix.  The matrix-only
    algorithms (5cc, iomr) accept a graph only when it is complete; graph
    algorithms accept a matrix through its complete-graph view.  Requesting an
    omega the algorithm does not produce is a precondition violation.
    """
    if algo not in ALGORITHMS:
        raise ValueError(f"unknown algorithm {algo!r}; expected one of {ALGORITHMS}")
    if omega not in ALGO_OMEGAS[algo]:
        allowed = "/".join(o.value for o in ALGO_OMEGAS[algo])
        raise PreconditionError(f"algorithm {algo} solves omega {allowed}, not {omega.value}")

    if isinstance(instance, DistanceMatrix):
        graph = instance.to_graph()
        matrix = instance
    else:
        graph = instance
        matrix = None
    if algo in _MATRIX_ONLY and matrix is None:
        matrix = DistanceMatrix.from_graph(graph)  # raises unless complete

    iterations = None
    repaired_cells = None
    start = time.perf_counter()
    if algo == "dmr":
        delta = decrease_repair(graph)
    elif algo == "fpt":
        delta = fpt_min_repair(graph, omega).delta
    elif algo == "spc":
        report = shortest_path_cover(graph)
        delta, iterations = report.delta, report.iterations
    elif algo == "gspc":
        report = general_shortest_path_cover(graph, omega)
        delta, iterations = report.delta, report.iterations
    elif algo == "5cc":
        report = five_cycle_cover(matrix)
        delta, iterations = report.delta, report.iterations
    elif algo == "iomr":
        delta = matrix_sweep_repair(matrix)
        repaired_cells = repaired_cell_count(delta)
    else:
        found = brute_force_opt(graph, omega, edge_limit=oracle_edge_limit)
        if found is None:
            raise NoSolutionError("no support within the oracle budget")
        delta = found[1]
    elapsed_ms = (time.perf_counter() - start) * 1000.0

    repaired = apply_delta(graph, delta)
    valid = is_metric(repaired) and all(omega.allows(v) for _, v in delta.items())
    report = RepairReport(
        algo=algo,
        omega=omega,
        n=graph.n,
        m=graph.m,
        delta=delta,
        support_size=delta.norm0(),
        time_ms=elapsed_ms,
        iterations=iterations,
        repaired_cells=repaired_cells,
        valid=valid,
    )
    if exact_cycle_budget is not None and graph.n <= exact_cycle_budget:
        report.longest_broken_cycle = instance_stats(
            graph, cycle_budget=exact_cycle_budget).longest_broken_cycle
    return report
