"""Enumeration and branch-and-bound oracles: agreement and guard rails."""

from __future__ import annotations

import random

import pytest

from metric_repair import (
    EnumerationBudgetError,
    OmegaClass,
    WeightedGraph,
    all_optimal_supports,
    apply_delta,
    brute_force_opt,
    is_metric,
    minimum_cycle_cover,
    verify_support,
)
from metric_repair.gadgets import cycle_fig_one

from conftest import random_mixed_instance


C5 = WeightedGraph(5, [(0, 1, 5), (1, 2, 1), (2, 3, 1), (3, 4, 1), (4, 0, 1)])
METRIC = WeightedGraph(3, [(0, 1, 1), (1, 2, 1), (0, 2, 1)])


def test_metric_graph_has_empty_optimum():
    for omega in OmegaClass:
        support, delta = brute_force_opt(METRIC, omega)
        assert support == frozenset()
        assert delta.norm0() == 0


def test_c5_increase_optimum_is_one_bottom_edge():
    support, delta = brute_force_opt(C5, OmegaClass.INCREASE_ONLY)
    assert len(support) == 1
    (edge,) = support
    assert edge != (0, 1)  # must be a bottom edge
    assert is_metric(apply_delta(C5, delta))


def test_enumeration_order_is_cardinality_then_lexicographic():
    support, _ = brute_force_opt(C5, OmegaClass.INCREASE_ONLY)
    assert support == frozenset({(0, 4)})  # first bottom edge in edge order
    general, _ = brute_force_opt(C5, OmegaClass.GENERAL)
    assert general == frozenset({(0, 1)})  # the top edge sorts first overall


def test_max_support_bound_returns_none():
    heavy = cycle_fig_one(6)
    got = brute_force_opt(heavy, OmegaClass.INCREASE_ONLY, max_support=0)
    assert got is None


def test_edge_limit_guard():
    big = WeightedGraph(8, ((u, v, 1) for u in range(8) for v in range(u + 1, 8)))
    with pytest.raises(EnumerationBudgetError):
        brute_force_opt(big, OmegaClass.GENERAL, edge_limit=20)
    brute_force_opt(big, OmegaClass.GENERAL, edge_limit=28)


def test_edge_limit_env_var(monkeypatch):
    big = WeightedGraph(8, ((u, v, 1) for u in range(8) for v in range(u + 1, 8)))
    monkeypatch.setenv("METRIC_REPAIR_ORACLE_EDGE_LIMIT", "10")
    with pytest.raises(EnumerationBudgetError):
        brute_force_opt(big, OmegaClass.GENERAL)
    monkeypatch.setenv("METRIC_REPAIR_ORACLE_EDGE_LIMIT", "30")
    brute_force_opt(big, OmegaClass.GENERAL)


def test_verifier_and_cycle_methods_agree():
    for seed in range(20):
        g = random_mixed_instance(seed=600 + seed, max_n=6, max_m=10)
        for omega in (OmegaClass.INCREASE_ONLY, OmegaClass.GENERAL):
            a = brute_force_opt(g, omega, method="verifier")
            b = brute_force_opt(g, omega, method="cycles")
            assert a is not None and b is not None
            assert a[0] == b[0]
            assert a[1] == b[1]


def test_branch_and_bound_matches_enumeration():
    for seed in range(20):
        g = random_mixed_instance(seed=700 + seed, max_n=6, max_m=10)
        for omega in (OmegaClass.INCREASE_ONLY, OmegaClass.GENERAL):
            enum = brute_force_opt(g, omega, method="cycles")
            size, support = minimum_cycle_cover(g, omega)
            assert size == len(enum[0])
            assert verify_support(g, support, omega).accepted


def test_capped_cover_is_a_lower_bound():
    for seed in range(10):
        g = random_mixed_instance(seed=800 + seed, max_n=6, max_m=10)
        full, _ = minimum_cycle_cover(g, OmegaClass.INCREASE_ONLY)
        capped, _ = minimum_cycle_cover(g, OmegaClass.INCREASE_ONLY, max_cycle_len=3)
        assert capped <= full


def test_increase_needs_at_least_general_sized_support():
    for seed in range(25):
        g = random_mixed_instance(seed=900 + seed, max_n=6, max_m=10)
        inc = brute_force_opt(g, OmegaClass.INCREASE_ONLY, method="cycles")
        gen = brute_force_opt(g, OmegaClass.GENERAL, method="cycles")
        assert len(inc[0]) >= len(gen[0])


def test_decrease_oracle_feasibility_is_sound():
    for seed in range(15):
        g = random_mixed_instance(seed=1000 + seed, max_n=6, max_m=10)
        found = brute_force_opt(g, OmegaClass.DECREASE_ONLY)
        assert found is not None
        support, delta = found
        assert delta.support <= support
        assert is_metric(apply_delta(g, delta))


def test_optima_are_invariant_under_weight_scaling():
    # Dividing every weight by a constant preserves broken cycles exactly, so
    # optimal sizes must not move; exercises the rational arithmetic paths.
    from fractions import Fraction

    for seed in range(15):
        base = random_mixed_instance(seed=1100 + seed, max_n=6, max_m=10)
        den = (seed % 6) + 2
        scaled = WeightedGraph(base.n, ((u, v, Fraction(int(base.weight(u, v)), den))
                                        for (u, v) in base.edges))
        for omega in OmegaClass:
            a = brute_force_opt(base, omega)
            b = brute_force_opt(scaled, omega)
            assert len(a[0]) == len(b[0]), (seed, omega)


def test_all_optimal_supports_are_exactly_the_accepted_minimums():
    g = C5
    opt, supports = all_optimal_supports(g, OmegaClass.INCREASE_ONLY, method="cycles")
    assert opt == 1
    # every bottom edge alone is optimal, the top edge is not
    assert set(supports) == {frozenset({e}) for e in g.edges if e != (0, 1)}
