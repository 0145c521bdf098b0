#!/usr/bin/env python3
"""Walkthrough: detecting broken cycles and repairing them exactly.

A weighted graph "satisfies a metric" when no cycle has an edge strictly
heavier than the rest of the cycle; equivalently every edge is a shortest
path between its endpoints.  This script builds a corrupted cycle, inspects
the violation, and repairs it three ways: the closed-form decrease-only
solver, the support Verifier, and the brute-force optimum.
"""

from metric_repair import (
    OmegaClass,
    WeightedGraph,
    apply_delta,
    brute_force_opt,
    broken_triangles,
    decrease_repair,
    find_broken_witness,
    is_metric,
    longest_broken_cycle_len,
    verify_support,
)

# A 5-cycle whose (0,1) edge was corrupted upward: 5 > 1+1+1+1.
g = WeightedGraph(5, [(0, 1, 5), (1, 2, 1), (2, 3, 1), (3, 4, 1), (4, 0, 1)])

print("== instance ==")
for (u, v) in g.edges:
    print(f"  edge ({u},{v}) weight {g.weight(u, v)}")
print("metric?", is_metric(g))

witness = find_broken_witness(g)
print("\n== witness ==")
print("cycle:", "-".join(map(str, witness.cycle)))
print("top edge:", witness.top_edge, "(heavier than the rest of the cycle)")
print("broken triangles:", len(broken_triangles(g)), "(the cycle is the only violation)")
print("longest broken cycle:", longest_broken_cycle_len(g, budget=6))

print("\n== decrease-only repair ==")
delta = decrease_repair(g)
print("entries:", dict(delta.items()))
print("one decrease pulls the heavy edge down to its detour length;")
print("repaired is metric?", is_metric(apply_delta(g, delta)))

print("\n== the support Verifier ==")
print("Can the instance be repaired by touching ONLY edge (2,3), increases only?")
outcome = verify_support(g, [(2, 3)], OmegaClass.INCREASE_ONLY)
print("accepted:", outcome.accepted, "delta:", dict(outcome.delta.items()))
print("Raising one bottom edge to the weight cap also balances the cycle.")

print("\nCan it be repaired by touching only the heavy edge, increases only?")
outcome = verify_support(g, [(0, 1)], OmegaClass.INCREASE_ONLY)
print("accepted:", outcome.accepted, "reason:", outcome.reason.value)
print("The heavy edge would have to come DOWN, so increase-only fails there.")

print("\n== brute-force optimum ==")
for omega in OmegaClass:
    support, best = brute_force_opt(g, omega)
    print(f"omega={omega.value:9s} optimal support size {len(support)}: {sorted(support)}")
