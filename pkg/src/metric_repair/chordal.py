"""Chordal graph recognition via maximum cardinality search."""

from __future__ import annotations

from .graphs import WeightedGraph


def perfect_elimination_ordering(g: WeightedGraph) -> tuple[int, ...] | None:
    """A perfect elimination ordering of ``g``, or None if it is not chordal.

    Runs maximum cardinality search (ties broken toward smaller vertex ids) and
    validates the reversed visit order with the standard parent test: for each
    vertex, its later neighbors minus the earliest of them must all be adjacent
    to that earliest one.
    """
    n = g.n
    if n == 0:
        return ()
    weight = [0] * n
    visited = [False] * n
    visit_order: list[int] = []
    for _ in range(n):
        best = max((v for v in range(n) if not visited[v]),
                   key=lambda v: (weight[v], -v))
        visited[best] = True
        visit_order.append(best)
        for u in g.neighbors(best):
            if not visited[u]:
                weight[u] += 1

    elimination = visit_order[::-1]
    position = {v: i for i, v in enumerate(elimination)}
    neighbor_sets = [set(g.neighbors(v)) for v in range(n)]
    for v in elimination:
        later = [u for u in g.neighbors(v) if position[u] > position[v]]
        if not later:
            continue
        parent = min(later, key=position.__getitem__)
        for u in later:
            if u != parent and u not in neighbor_sets[parent]:
                return None
    return tuple(elimination)


def is_chordal(g: WeightedGraph) -> bool:
    return perfect_elimination_ordering(g) is not None
