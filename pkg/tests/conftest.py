"""Shared instance generators for the test suite.

Everything is seeded; tests freeze their seeds so reruns are identical.
"""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import combinations, permutations

from metric_repair import DistanceMatrix, WeightedGraph, edge_key


def random_graph(rng: random.Random, n: int, m: int,
                 weights=(0, 10)) -> WeightedGraph:
    """Random graph with exactly m edges and integer weights."""
    pairs = list(combinations(range(n), 2))
    rng.shuffle(pairs)
    lo, hi = weights
    return WeightedGraph(n, ((u, v, rng.randint(lo, hi)) for (u, v) in pairs[:m]))


def random_mixed_instance(seed: int, max_n: int = 6, max_m: int = 12,
                          weights=(0, 10)) -> WeightedGraph:
    """Sparse or complete random instance under the given size caps."""
    rng = random.Random(seed)
    if rng.random() < 0.3:
        n = rng.randint(3, max_n)
        while n * (n - 1) // 2 > max_m:
            n -= 1
        return random_graph(rng, n, n * (n - 1) // 2, weights)
    n = rng.randint(3, max_n)
    m = rng.randint(n - 1, min(max_m, n * (n - 1) // 2))
    return random_graph(rng, n, m, weights)


def random_matrix(rng: random.Random, n: int, top: int = 12) -> DistanceMatrix:
    rows = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            w = rng.randint(0, top)
            rows[i][j] = w
            rows[j][i] = w
    return DistanceMatrix(rows)


# -- independent brute-force oracles ------------------------------------------


def all_simple_path_dist(g: WeightedGraph, s: int, t: int) -> Fraction | None:
    """Minimum path weight by exhaustive DFS over simple paths."""
    if s == t:
        return Fraction(0)
    best: list[Fraction | None] = [None]

    def walk(v: int, used: set, acc: Fraction) -> None:
        for u in g.neighbors(v):
            if u in used:
                continue
            total = acc + g.weight(v, u)
            if best[0] is not None and total > best[0]:
                continue
            if u == t:
                if best[0] is None or total < best[0]:
                    best[0] = total
            else:
                used.add(u)
                walk(u, used, total)
                used.remove(u)

    walk(s, {s}, Fraction(0))
    return best[0]


def enumerate_cycles_by_permutation(g: WeightedGraph):
    """Every simple cycle, generated independently via subset permutations.

    Yields canonical vertex tuples (smallest vertex first, second < last);
    only usable on tiny graphs.
    """
    n = g.n
    for size in range(3, n + 1):
        for subset in combinations(range(n), size):
            first = subset[0]
            for rest in permutations(subset[1:]):
                if rest[0] > rest[-1]:
                    continue
                cycle = (first,) + rest
                if all(g.has_edge(cycle[i], cycle[(i + 1) % size])
                       for i in range(size)):
                    yield cycle


def broken_cycles_brute(g: WeightedGraph):
    """(cycle, top_edge) pairs for every broken cycle, independent route."""
    for cycle in enumerate_cycles_by_permutation(g):
        size = len(cycle)
        edges = [edge_key(cycle[i], cycle[(i + 1) % size]) for i in range(size)]
        weights = [g.weight(*e) for e in edges]
        total = sum(weights, Fraction(0))
        for e, w in zip(edges, weights):
            if 2 * w > total:
                yield cycle, e
                break


def is_metric_brute(g: WeightedGraph) -> bool:
    return next(iter(broken_cycles_brute(g)), None) is None


def min_vertex_cover_size(n: int, edges) -> int:
    """Brute-force minimum vertex cover of an unweighted graph."""
    edges = list(edges)
    for size in range(n + 1):
        for cover in combinations(range(n), size):
            chosen = set(cover)
            if all(u in chosen or v in chosen for (u, v) in edges):
                return size
    raise AssertionError("all vertices always cover")
