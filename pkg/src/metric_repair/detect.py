"""Detection of broken cycles and metric violations.

A cycle is *broken* when one of its edges strictly outweighs the sum of all
the others; that heavy edge is the cycle's top edge and the rest are bottom
edges.  A weighted graph satisfies a metric exactly when it has no broken
cycle, which is equivalent to every edge being a shortest path between its
endpoints (ties are fine: equality does not break a cycle).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterator

from .graphs import (
    BrokenCycleWitness,
    EnumerationBudgetError,
    InstanceStats,
    WeightedGraph,
    edge_key,
)
from .paths import apsp


def is_metric(g: WeightedGraph) -> bool:
    """True iff every edge weight equals the distance between its endpoints."""
    d = apsp(g)
    return all(d.dist(u, v) == w for (u, v), w in g.weight_map().items())


def find_broken_witness(g: WeightedGraph) -> BrokenCycleWitness | None:
    """A broken cycle certificate, or None when the graph is metric.

    Scans edges in lexicographic order; the first edge that is strictly longer
    than the distance between its endpoints is the top edge of a broken cycle,
    closed by the canonical shortest path.
    """
    d = apsp(g)
    for (u, v) in g.edges:
        if d.dist(u, v) < g.weight(u, v):
            path = d.path(u, v)
            assert path is not None and len(path) >= 3
            return BrokenCycleWitness(cycle=path, top_edge=(u, v))
    return None


def broken_triangles(g: WeightedGraph) -> tuple[BrokenCycleWitness, ...]:
    """All broken 3-cycles, each with its top edge, in deterministic order."""
    out = []
    for (u, v) in g.edges:
        for x in g.common_neighbors(u, v):
            if x <= v:
                continue  # count each triangle once via its two smallest vertices
            witness = _triangle_witness(g, u, v, x)
            if witness is not None:
                out.append(witness)
    return tuple(out)


def _triangle_witness(g: WeightedGraph, a: int, b: int, c: int) -> BrokenCycleWitness | None:
    edges = (edge_key(a, b), edge_key(a, c), edge_key(b, c))
    weights = [g.weight(*e) for e in edges]
    total = sum(weights, Fraction(0))
    for e, w in zip(edges, weights):
        if 2 * w > total:
            return BrokenCycleWitness(cycle=(a, b, c), top_edge=e)
    return None


def cycle_top_edge(g: WeightedGraph, cycle: tuple[int, ...]) -> tuple[int, int] | None:
    """Top edge of ``cycle`` if it is broken in ``g``, else None.

    At most one edge can strictly outweigh the rest of a cycle, so the top
    edge is unique whenever it exists.
    """
    m = len(cycle)
    edges = [edge_key(cycle[i], cycle[(i + 1) % m]) for i in range(m)]
    weights = [g.weight(*e) for e in edges]
    total = sum(weights, Fraction(0))
    for e, w in zip(edges, weights):
        if 2 * w > total:
            return e
    return None


def simple_cycles(g: WeightedGraph, max_len: int | None = None) -> Iterator[tuple[int, ...]]:
    """Every simple cycle of ``g``, once, in a canonical orientation.

    Cycles are emitted as vertex tuples starting at their smallest vertex with
    the second vertex smaller than the last (fixing the direction).  The count
    grows exponentially; callers guard the size.
    """
    n = g.n
    limit = n if max_len is None else min(max_len, n)
    path: list[int] = []
    on_path = [False] * n

    def extend(root: int) -> Iterator[tuple[int, ...]]:
        v = path[-1]
        for w in g.neighbors(v):
            if w == root and len(path) >= 3 and path[1] < path[-1]:
                yield tuple(path)
            elif w > root and not on_path[w] and len(path) < limit:
                path.append(w)
                on_path[w] = True
                yield from extend(root)
                on_path[w] = False
                path.pop()

    for root in range(n):
        path = [root]
        on_path = [False] * n
        on_path[root] = True
        yield from extend(root)


def broken_cycles(g: WeightedGraph, max_len: int | None = None) -> Iterator[BrokenCycleWitness]:
    """All broken cycles (up to ``max_len`` edges), by exhaustive enumeration."""
    for cycle in simple_cycles(g, max_len=max_len):
        top = cycle_top_edge(g, cycle)
        if top is not None:
            yield BrokenCycleWitness(cycle=cycle, top_edge=top)


def longest_broken_cycle_len(g: WeightedGraph, budget: int) -> int | None:
    """Exact length of the longest broken cycle; None when the graph is metric.

    Refuses to run on graphs with more than ``budget`` vertices because the
    enumeration is exponential.
    """
    if g.n > budget:
        raise EnumerationBudgetError(
            f"cycle enumeration needs n <= {budget}, got n = {g.n}")
    longest = None
    for witness in broken_cycles(g):
        if longest is None or len(witness.cycle) > longest:
            longest = len(witness.cycle)
    return longest


def instance_stats(g: WeightedGraph, cycle_budget: int | None = None) -> InstanceStats:
    """Summary facts; the longest-cycle scan runs only within ``cycle_budget``."""
    metric = is_metric(g)
    tri = len(broken_triangles(g))
    if cycle_budget is not None and g.n <= cycle_budget:
        return InstanceStats(
            is_metric=metric,
            broken_triangle_count=tri,
            longest_broken_cycle=longest_broken_cycle_len(g, cycle_budget),
            cycle_length_computed=True,
        )
    return InstanceStats(is_metric=metric, broken_triangle_count=tri)
