"""Broken-cycle detection against independent permutation-based enumeration."""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import combinations

import pytest

from metric_repair import (
    EnumerationBudgetError,
    WeightedGraph,
    broken_triangles,
    find_broken_witness,
    instance_stats,
    is_metric,
    longest_broken_cycle_len,
    simple_cycles,
)
from metric_repair.detect import cycle_top_edge
from metric_repair.gadgets import random_chordal_edges
from metric_repair.graphs import edge_key

from conftest import (
    broken_cycles_brute,
    enumerate_cycles_by_permutation,
    is_metric_brute,
    random_graph,
)


def test_equilateral_triangle_is_metric():
    g = WeightedGraph(3, [(0, 1, 1), (1, 2, 1), (0, 2, 1)])
    assert is_metric(g)


def test_heavy_c4_is_broken():
    g = WeightedGraph(4, [(0, 1, 5), (1, 2, 1), (2, 3, 1), (3, 0, 1)])
    assert not is_metric(g)
    w = find_broken_witness(g)
    assert w is not None
    assert sorted(w.cycle) == [0, 1, 2, 3]
    assert w.top_edge == (0, 1)
    w.check(g)


def test_boundary_equality_is_metric():
    # top weight equals the sum of the rest: not broken (strict inequality)
    g = WeightedGraph(3, [(0, 1, 2), (1, 2, 1), (0, 2, 1)])
    assert is_metric(g)
    assert broken_triangles(g) == ()


def test_metric_graph_has_no_witness():
    g = WeightedGraph(3, [(0, 1, 1), (1, 2, 1), (0, 2, 1)])
    assert find_broken_witness(g) is None


def test_is_metric_matches_bruteforce_cycle_scan():
    for seed in range(40):
        rng = random.Random(seed)
        n = rng.randint(3, 6)
        m = rng.randint(n - 1, n * (n - 1) // 2)
        g = random_graph(rng, n, m, weights=(0, 8))
        assert is_metric(g) == is_metric_brute(g), seed


def test_witness_invariants_on_random_broken_instances():
    found = 0
    for seed in range(60):
        rng = random.Random(1000 + seed)
        g = random_graph(rng, 6, 10, weights=(0, 8))
        w = find_broken_witness(g)
        if w is None:
            assert is_metric(g)
            continue
        w.check(g)
        found += 1
    assert found >= 20  # the sweep actually exercised broken instances


def test_simple_cycles_match_permutation_enumeration():
    for seed in range(12):
        rng = random.Random(2000 + seed)
        g = random_graph(rng, 6, rng.randint(5, 15), weights=(1, 3))
        mine = sorted(simple_cycles(g))
        brute = sorted(enumerate_cycles_by_permutation(g))
        assert mine == brute


def test_broken_triangles_triangle_examples():
    one = WeightedGraph(3, [(0, 1, 3), (1, 2, 1), (0, 2, 1)])
    (w,) = broken_triangles(one)
    assert w.top_edge == (0, 1)
    boundary = WeightedGraph(3, [(0, 1, 2), (1, 2, 1), (0, 2, 1)])
    assert broken_triangles(boundary) == ()


def test_broken_triangles_match_triple_scan_on_k5():
    for seed in range(10):
        rng = random.Random(3000 + seed)
        g = random_graph(rng, 5, 10, weights=(0, 9))
        expected = set()
        for (a, b, c) in combinations(range(5), 3):
            edges = [edge_key(a, b), edge_key(a, c), edge_key(b, c)]
            ws = [g.weight(*e) for e in edges]
            total = sum(ws, Fraction(0))
            for e, w in zip(edges, ws):
                if 2 * w > total:
                    expected.add(((a, b, c), e))
        got = {(tuple(sorted(t.cycle)), t.top_edge) for t in broken_triangles(g)}
        assert got == expected


def test_longest_broken_cycle_examples():
    c5 = WeightedGraph(5, [(0, 1, 5), (1, 2, 1), (2, 3, 1), (3, 4, 1), (4, 0, 1)])
    assert longest_broken_cycle_len(c5, budget=6) == 5
    metric = WeightedGraph(3, [(0, 1, 1), (1, 2, 1), (0, 2, 1)])
    assert longest_broken_cycle_len(metric, budget=6) is None
    with pytest.raises(EnumerationBudgetError):
        longest_broken_cycle_len(c5, budget=4)


def test_longest_broken_cycle_matches_bruteforce():
    for seed in range(15):
        rng = random.Random(4000 + seed)
        g = random_graph(rng, 6, rng.randint(6, 12), weights=(0, 9))
        brute = max((len(c) for c, _ in broken_cycles_brute(g)), default=None)
        assert longest_broken_cycle_len(g, budget=6) == brute


def test_cycle_top_edge_is_unique_when_present():
    g = WeightedGraph(4, [(0, 1, 9), (1, 2, 1), (2, 3, 1), (3, 0, 1)])
    assert cycle_top_edge(g, (0, 1, 2, 3)) == (0, 1)
    balanced = WeightedGraph(4, [(0, 1, 1), (1, 2, 1), (2, 3, 1), (3, 0, 1)])
    assert cycle_top_edge(balanced, (0, 1, 2, 3)) is None


def test_chordal_detection_completeness():
    # On chordal graphs a broken cycle forces a broken triangle, so the two
    # detectors must agree; edge weights are randomized over a random chordal
    # topology.
    for seed in range(30):
        rng = random.Random(5000 + seed)
        edges = random_chordal_edges(rng.randint(4, 8), rng)
        n = 1 + max(max(e) for e in edges)
        g = WeightedGraph(n, ((u, v, rng.randint(0, 6)) for (u, v) in edges))
        assert (find_broken_witness(g) is not None) == bool(broken_triangles(g))


def test_instance_stats():
    c5 = WeightedGraph(5, [(0, 1, 5), (1, 2, 1), (2, 3, 1), (3, 4, 1), (4, 0, 1)])
    s = instance_stats(c5, cycle_budget=6)
    assert not s.is_metric
    assert s.broken_triangle_count == 0
    assert s.longest_broken_cycle == 5
    assert s.ratio_parameter == 4
    partial = instance_stats(c5)
    assert partial.longest_broken_cycle is None
    assert not partial.cycle_length_computed


def test_determinism_of_witnesses():
    rng = random.Random(9)
    g = random_graph(rng, 6, 12, weights=(0, 7))
    h = WeightedGraph(6, ((u, v, g.weight(u, v)) for (u, v) in g.edges))
    assert find_broken_witness(g) == find_broken_witness(h)
    assert broken_triangles(g) == broken_triangles(h)
