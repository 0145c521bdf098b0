"""Approximation algorithms for increase-only and general repair.

``shortest_path_cover`` repeatedly computes one canonical shortest path per
remaining edge, keeps only the paths strictly shorter than their edge, moves
each processed path's edges into the support (deleting them from the working
graph and discarding stored paths that lose an edge), and recomputes when the
batch runs dry.  Every broken cycle ends up with a bottom edge in the support,
so the closing Verifier call always accepts in increase-only mode, with at
most (L * OPT) support edges where L+1 bounds the broken-cycle length.  The
general variant also moves each processed path's closing edge into the
support, for an (L+1) * OPT bound.

``five_cycle_cover`` and ``matrix_sweep_repair`` operate on the complete-graph
view (a distance matrix): the former greedily covers every broken cycle on at
most five vertices and then verifies, the latter performs a single cubic
raising sweep over the matrix.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, permutations
from math import gcd

from .exact import verify_support, VerifierOutcome
from .graphs import (
    DistanceMatrix,
    MetricRepairError,
    OmegaClass,
    RepairDelta,
    WeightedGraph,
    edge_key,
)
from .paths import apsp

_SWEEP_NUMPY_MIN_N = 48
_INT64_SAFE = 2 ** 62


class SupportRejectedError(MetricRepairError):
    """An approximation produced a support the Verifier would not accept."""

    def __init__(self, outcome: VerifierOutcome):
        super().__init__(f"support rejected: {outcome.reason.value}")
        self.outcome = outcome


@dataclass(frozen=True)
class ApproxReport:
    """Solution plus the run facts the benches report."""

    support: frozenset
    delta: RepairDelta
    iterations: int
    ratio_bound: str
    batches: tuple = ()
    stage_one_cover: frozenset | None = None


def shortest_path_cover(g: WeightedGraph) -> ApproxReport:
    """Greedy path-cover repair, increase-only."""
    return _path_cover(g, close_cycle=False, omega=OmegaClass.INCREASE_ONLY)


def general_shortest_path_cover(
    g: WeightedGraph, omega: OmegaClass = OmegaClass.GENERAL) -> ApproxReport:
    """Path-cover repair that also claims each path's closing edge.

    The natural sign class is general; an increase-only verification can be
    requested but is not guaranteed to accept, in which case this raises
    ``SupportRejectedError``.
    """
    if omega is OmegaClass.DECREASE_ONLY:
        raise MetricRepairError("path cover produces increase-only or general repairs")
    return _path_cover(g, close_cycle=True, omega=omega)


def _path_cover(g: WeightedGraph, close_cycle: bool, omega: OmegaClass) -> ApproxReport:
    support: set = set()
    batches: list[tuple] = []
    working = g.weight_map()
    iterations = 0
    while True:
        iterations += 1
        snapshot = WeightedGraph(g.n, ((u, v, w) for (u, v), w in working.items()))
        d = apsp(snapshot)
        pending = []
        for (u, v) in snapshot.edges:
            if d.dist(u, v) < working[(u, v)]:
                path = d.path(u, v)
                path_edges = frozenset(
                    edge_key(path[i], path[i + 1]) for i in range(len(path) - 1))
                pending.append(((u, v), path, path_edges))
        if not pending:
            break
        batch = []
        while pending:
            top, path, path_edges = pending.pop(0)
            batch.append(path)
            removed = set(path_edges)
            if close_cycle:
                removed.add(top)
            support |= removed
            for e in removed:
                working.pop(e, None)
            pending = [entry for entry in pending if not (entry[2] & removed)]
        batches.append(tuple(batch))

    outcome = verify_support(g, support, omega)
    if not outcome.accepted:
        raise SupportRejectedError(outcome)
    return ApproxReport(
        support=frozenset(support),
        delta=outcome.delta,
        iterations=iterations,
        ratio_bound="L+1" if close_cycle else "L",
        batches=tuple(batches),
    )


# -- five-cycle cover ---------------------------------------------------------


def short_cycles_complete(n: int, max_len: int = 5):
    """Canonical cycles of the complete graph K_n with at most ``max_len`` edges.

    Ordered by length, then lexicographically by vertex set and arrangement;
    each cycle appears once (smallest vertex first, second < last).
    """
    for m in range(3, min(max_len, n) + 1):
        for subset in combinations(range(n), m):
            first = subset[0]
            for rest in permutations(subset[1:]):
                if rest[0] < rest[-1]:
                    yield (first,) + rest


def five_cycle_cover(d: DistanceMatrix) -> ApproxReport:
    """Cover every broken cycle on at most 5 vertices, then verify.

    Walking the short cycles in canonical order, any broken one with no bottom
    edge in the cover yet contributes all of its edges.  A second pass records
    the 4-cycles embedded in the cover (pairs of disjoint cover edges closed by
    two more cover edges); their edges join the returned support.  The final
    increase-only verification is expected to accept; a rejection raises.
    """
    rows = d.rows()
    n = d.n
    cover: set = set()
    for cycle in short_cycles_complete(n):
        m = len(cycle)
        edges = [edge_key(cycle[i], cycle[(i + 1) % m]) for i in range(m)]
        weights = [rows[e[0]][e[1]] for e in edges]
        total = sum(weights, Fraction(0))
        top = None
        for e, w in zip(edges, weights):
            if 2 * w > total:
                top = e
                break
        if top is None:
            continue
        if any(e != top and e in cover for e in edges):
            continue
        cover.update(edges)
    stage_one = frozenset(cover)
    support = stage_one | embedded_square_edges(stage_one)

    g = d.to_graph()
    outcome = verify_support(g, support, OmegaClass.INCREASE_ONLY)
    if not outcome.accepted:
        raise SupportRejectedError(outcome)
    return ApproxReport(
        support=frozenset(support),
        delta=outcome.delta,
        iterations=1,
        ratio_bound="n/a",
        stage_one_cover=stage_one,
    )


def embedded_square_edges(cover: frozenset) -> frozenset:
    """Edges of the 4-cycles whose four edges all lie inside ``cover``."""
    edges = sorted(cover)
    out: set = set()
    for a in range(len(edges)):
        (p, q) = edges[a]
        for b in range(a + 1, len(edges)):
            (r, s) = edges[b]
            if r in (p, q) or s in (p, q):
                continue
            for (x, y), (z, w) in (((q, r), (s, p)), ((q, s), (r, p))):
                side1, side2 = edge_key(x, y), edge_key(z, w)
                if side1 in cover and side2 in cover:
                    out.update((edges[a], edges[b], side1, side2))
    return frozenset(out)


# -- matrix raising sweep -----------------------------------------------------


def matrix_sweep_repair(d: DistanceMatrix) -> RepairDelta:
    """One cubic raising sweep over the matrix; increase-only.

    For each column ``k`` and row ``i`` in order, the entry ``(i, k)`` is
    raised to ``max_j < i (D[i][j] - D[j][k])`` whenever that beats its current
    value, mirroring the update to ``(k, i)`` immediately.  The result is
    metric and touches at most (n-1)(n-2) matrix cells.
    """
    n = d.n
    integer = _matrix_integer_form(d)
    if integer is not None and n >= _SWEEP_NUMPY_MIN_N:
        scale, int_rows = integer
        raised = _sweep_numpy(n, int_rows)
        entries = {}
        for i in range(n):
            for j in range(i + 1, n):
                if raised[i][j] != int_rows[i][j]:
                    entries[(i, j)] = Fraction(raised[i][j] - int_rows[i][j], scale)
        return RepairDelta(entries, OmegaClass.INCREASE_ONLY)

    rows = [list(r) for r in d.rows()]
    for k in range(n):
        for i in range(n):
            row_i = rows[i]
            current = row_i[k]
            best = current
            for j in range(i):
                cand = row_i[j] - rows[j][k]
                if cand > best:
                    best = cand
            if best > current:
                rows[i][k] = best
                rows[k][i] = best
    entries = {}
    for i in range(n):
        for j in range(i + 1, n):
            if rows[i][j] != d.entry(i, j):
                entries[(i, j)] = rows[i][j] - d.entry(i, j)
    return RepairDelta(entries, OmegaClass.INCREASE_ONLY)


def repaired_cell_count(delta: RepairDelta) -> int:
    """Number of matrix cells a delta touches (each pair counts twice)."""
    return 2 * delta.norm0()


def _matrix_integer_form(d: DistanceMatrix):
    scale = 1
    for row in d.rows():
        for x in row:
            scale = scale * x.denominator // gcd(scale, x.denominator)
    top = max((x for row in d.rows() for x in row), default=Fraction(0))
    if top * scale >= _INT64_SAFE:
        return None
    return scale, [[int(x * scale) for x in row] for row in d.rows()]


def _sweep_numpy(n: int, int_rows) -> list[list[int]]:
    import numpy as np

    m = np.array(int_rows, dtype=np.int64)
    for k in range(n):
        col_k = m[:, k]
        for i in range(1, n):
            best = int((m[i, :i] - col_k[:i]).max())
            if best > m[i, k]:
                m[i, k] = best
                m[k, i] = best
    return m.tolist()
