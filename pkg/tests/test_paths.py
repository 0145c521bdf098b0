"""Shortest-path engines against an exhaustive path-enumeration oracle."""

from __future__ import annotations

import random
from fractions import Fraction

from metric_repair import WeightedGraph, apsp
from metric_repair.paths import _dense_int_numpy, _dense_int_python

from conftest import all_simple_path_dist, random_graph


def test_path_graph_distance():
    g = WeightedGraph(3, [(0, 1, 1), (1, 2, 1)])
    d = apsp(g)
    assert d.dist(0, 2) == 2
    assert d.path(0, 2) == (0, 1, 2)


def test_single_vertex():
    g = WeightedGraph(1)
    assert apsp(g).dist(0, 0) == 0
    assert apsp(g).path(0, 0) == (0,)


def test_disconnected_pairs_have_no_distance():
    g = WeightedGraph(4, [(0, 1, 3)])
    d = apsp(g)
    assert d.dist(0, 2) is None
    assert d.path(0, 2) is None


def test_complete_graph_matches_exhaustive_paths():
    # Frozen-seed K6 instances checked against brute-force path enumeration.
    for seed in range(8):
        rng = random.Random(seed)
        g = random_graph(rng, 6, 15, weights=(0, 12))
        d = apsp(g)
        for u in range(6):
            for v in range(6):
                assert d.dist(u, v) == all_simple_path_dist(g, u, v), (seed, u, v)


def test_sparse_random_matches_exhaustive_paths():
    for seed in range(8):
        rng = random.Random(100 + seed)
        g = random_graph(rng, 7, 9, weights=(1, 9))
        d = apsp(g)
        for u in range(7):
            for v in range(7):
                assert d.dist(u, v) == all_simple_path_dist(g, u, v)


def test_engines_agree_on_integers_and_fractions():
    for seed in range(10):
        rng = random.Random(200 + seed)
        g = random_graph(rng, 7, rng.randint(6, 21), weights=(0, 10))
        # fractional variant of the same topology
        frac = WeightedGraph(
            7, ((u, v, g.weight(u, v) / 3) for (u, v) in g.edges))
        for inst in (g, frac):
            dense = apsp(inst, engine="dense")
            sparse = apsp(inst, engine="sparse")
            for u in range(7):
                for v in range(7):
                    assert dense.dist(u, v) == sparse.dist(u, v)


def test_numpy_and_python_dense_kernels_agree():
    for seed in range(5):
        rng = random.Random(300 + seed)
        g = random_graph(rng, 9, 20, weights=(0, 50))
        scale, intw = g.integer_form()
        sentinel = max(intw.values(), default=0) * g.n + 1
        assert _dense_int_python(g, scale, intw, sentinel) == \
            _dense_int_numpy(g, scale, intw, sentinel)


def test_distance_invariants():
    rng = random.Random(42)
    g = random_graph(rng, 6, 10, weights=(0, 7))
    d = apsp(g)
    for u in range(6):
        assert d.dist(u, u) == 0
        for v in range(6):
            assert d.dist(u, v) == d.dist(v, u)
    for (u, v) in g.edges:
        assert d.dist(u, v) <= g.weight(u, v)


def test_paths_have_exact_distance_weight():
    for seed in range(6):
        rng = random.Random(400 + seed)
        g = random_graph(rng, 7, 12, weights=(0, 9))
        d = apsp(g)
        for u in range(7):
            for v in range(7):
                p = d.path(u, v)
                if p is None:
                    continue
                total = sum((g.weight(p[i], p[i + 1]) for i in range(len(p) - 1)),
                            Fraction(0))
                assert total == d.dist(u, v)
                assert len(set(p)) == len(p)  # simple


def test_zero_weight_plateaus_reconstruct():
    # A zero-weight clique reached at equal distance used to be the hard case
    # for predecessor tie-breaking; the canonical tree must stay acyclic.
    g = WeightedGraph(5, [(2, 0, 4), (2, 1, 4), (0, 1, 0), (0, 3, 0), (1, 3, 0),
                          (3, 4, 1)])
    d = apsp(g)
    for v in range(5):
        p = d.path(2, v)
        assert p is not None and p[0] == 2 and p[-1] == v


def test_path_reconstruction_is_deterministic():
    rng = random.Random(77)
    g = random_graph(rng, 7, 14, weights=(0, 5))
    first = apsp(g, engine="dense")
    second = apsp(WeightedGraph(7, ((u, v, g.weight(u, v)) for (u, v) in g.edges)),
                  engine="sparse")
    for u in range(7):
        for v in range(7):
            assert first.path(u, v) == second.path(u, v)
