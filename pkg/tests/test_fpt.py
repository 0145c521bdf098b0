"""Fixed-parameter solvers against the enumeration oracle on chordal graphs."""

from __future__ import annotations


import pytest

from metric_repair import (
    OmegaClass,
    PreconditionError,
    WeightedGraph,
    all_optimal_supports,
    apply_delta,
    brute_force_opt,
    fpt_general,
    fpt_increase,
    fpt_min_repair,
    is_metric,
    verify_support,
)
from metric_repair.fpt import POOL_BOUND_FACTOR
from metric_repair.gadgets import planted_chordal

METRIC_TRIANGLE = WeightedGraph(3, [(0, 1, 1), (1, 2, 1), (0, 2, 1)])

# K4 with exactly one broken triangle (top edge (0,1))
ONE_TRIANGLE = WeightedGraph(
    4, [(0, 1, 3), (0, 2, 1), (1, 2, 1), (0, 3, 2), (1, 3, 2), (2, 3, 1)])

# K4 hub: the weight-5 edge tops every broken cycle; one decrease fixes all,
# but increase-only repairs need two bottom edges.
HUB = WeightedGraph(4, [(0, 1, 5), (0, 2, 1), (1, 2, 1), (0, 3, 1), (1, 3, 1),
                        (2, 3, 1)])


def test_metric_graph_found_at_zero():
    for solver in (fpt_increase, fpt_general):
        result = solver(METRIC_TRIANGLE, 0)
        assert result.found
        assert result.support == frozenset()
        assert result.delta.norm0() == 0
    auto = fpt_min_repair(METRIC_TRIANGLE, OmegaClass.INCREASE_ONLY)
    assert auto.budget == 0 and auto.support == frozenset()


def test_single_triangle_instance_matches_oracle():
    result = fpt_increase(ONE_TRIANGLE, 1)
    assert result.found and len(result.support) == 1
    oracle = brute_force_opt(ONE_TRIANGLE, OmegaClass.INCREASE_ONLY)
    assert len(oracle[0]) == 1
    assert is_metric(apply_delta(ONE_TRIANGLE, result.delta))


def test_budget_too_small_reports_not_found():
    assert not fpt_increase(HUB, 1).found  # increase optimum is 2
    assert fpt_general(HUB, 1).found       # one decrease suffices


def test_general_beats_increase_on_hub_instance():
    inc = fpt_min_repair(HUB, OmegaClass.INCREASE_ONLY)
    gen = fpt_min_repair(HUB, OmegaClass.GENERAL)
    assert len(inc.support) == 2
    assert len(gen.support) == 1
    assert len(brute_force_opt(HUB, OmegaClass.INCREASE_ONLY)[0]) == 2
    assert len(brute_force_opt(HUB, OmegaClass.GENERAL)[0]) == 1


def test_non_chordal_input_is_rejected():
    c5 = WeightedGraph(5, [(0, 1, 5), (1, 2, 1), (2, 3, 1), (3, 4, 1), (4, 0, 1)])
    with pytest.raises(PreconditionError):
        fpt_increase(c5, 2)
    with pytest.raises(PreconditionError):
        fpt_min_repair(c5, OmegaClass.GENERAL)


def test_negative_budget_and_decrease_mode_are_errors():
    with pytest.raises(ValueError):
        fpt_increase(METRIC_TRIANGLE, -1)
    with pytest.raises(PreconditionError):
        fpt_min_repair(METRIC_TRIANGLE, OmegaClass.DECREASE_ONLY)


def test_planted_instances_match_oracle():
    for seed in range(25):
        inst = planted_chordal(n=8, k=2, seed=seed)
        g = inst.instance
        for omega, solver in ((OmegaClass.INCREASE_ONLY, fpt_increase),
                              (OmegaClass.GENERAL, fpt_general)):
            auto = fpt_min_repair(g, omega)
            oracle = brute_force_opt(g, omega, method="cycles")
            assert len(auto.support) == len(oracle[0]), (seed, omega)
            assert verify_support(g, auto.support, omega).accepted or \
                auto.support == frozenset()
            assert is_metric(apply_delta(g, auto.delta))
            bound = POOL_BOUND_FACTOR[omega] * auto.budget ** 2
            assert auto.stats.max_pool <= bound
            assert auto.stats.pool_clamp_events == 0
            # Found at k implies optimum <= k; smaller budgets must fail.
            fixed = solver(g, auto.budget)
            assert fixed.found
            if auto.budget > 0:
                assert not solver(g, auto.budget - 1).found


def test_forced_seed_edges_lie_in_every_optimal_support():
    # An edge that is a bottom of more than k broken triangles must appear in
    # every optimal support; validated by enumerating all optima.
    checked = 0
    for seed in range(40):
        inst = planted_chordal(n=7, k=2, seed=1000 + seed)
        g = inst.instance
        opt, supports = all_optimal_supports(
            g, OmegaClass.INCREASE_ONLY, method="cycles")
        if opt == 0:
            continue
        from metric_repair.detect import broken_triangles
        counts: dict = {}
        for t in broken_triangles(g):
            for e in t.bottom_edges():
                counts[e] = counts.get(e, 0) + 1
        forced = {e for e, c in counts.items() if c > opt}
        for e in forced:
            assert all(e in s for s in supports)
            checked += 1
    assert checked >= 1


def test_forced_seed_edge_book_graph():
    # Four triangles share the bottom edge (0,1), so it is forced into the
    # seed for k=1 and alone repairs everything.
    edges = [(0, 1, 1)]
    for x in range(2, 6):
        edges += [(0, x, 7), (1, x, 1)]
    book = WeightedGraph(6, edges)
    result = fpt_increase(book, 1)
    assert result.found and result.support == frozenset({(0, 1)})
    assert dict(result.delta.items()) == {(0, 1): 6}
    assert len(brute_force_opt(book, OmegaClass.INCREASE_ONLY)[0]) == 1


def test_results_are_deterministic():
    inst = planted_chordal(n=9, k=3, seed=5)
    g = inst.instance
    first = fpt_min_repair(g, OmegaClass.INCREASE_ONLY)
    second = fpt_min_repair(g, OmegaClass.INCREASE_ONLY)
    assert first.support == second.support
    assert first.delta == second.delta
