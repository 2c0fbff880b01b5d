"""Deciding x^a in I^t and in its saturation, with the ideal oracle watching.

The criterion: x^a lies in I^t iff nu of the weighted graph of a reaches t;
it lies in the saturation iff every vertex i satisfies
nu(G_a - N_a(i)) >= t - deg_a(i).  Monomials in the gap sat \\ power are
exactly what make the maximal ideal associated.
"""

from edgesat import (
    SimpleGraph,
    edge_ideal,
    facets_delta,
    in_power,
    in_sat_minus_power,
    in_saturation,
    membership,
    power,
    saturate,
    saturating_vectors,
)

triangle = SimpleGraph.from_edges(3, [(1, 2), (1, 3), (2, 3)])
a = (1, 1, 1)

print("x*y*z against the triangle ideal, t = 2:")
print("  in I^2:", in_power(triangle, a, 2))
print("  in sat(I^2):", in_saturation(triangle, a, 2))
print("  in the gap:", in_sat_minus_power(triangle, a, 2))

j2 = power(edge_ideal(triangle), 2)
print("oracle view: I^2 =", j2.to_lists())
print("  sat(I^2) =", saturate(j2).to_lists())
print("  xyz in I^2:", membership(j2, a), " in sat:", membership(saturate(j2), a))
print()

print("a dominating pentagon with t = 3 (an odd cycle of length 2t-1):")
pentagon = SimpleGraph.from_edges(5, [(1, 2), (2, 3), (3, 4), (4, 5), (1, 5)])
print("  all-ones in sat(I^3) \\ I^3:", in_sat_minus_power(pentagon, (1, 1, 1, 1, 1), 3))
print()

print("all 2-saturating weight vectors on the triangle (there is exactly one):")
print(" ", saturating_vectors(triangle, 2))
print("and on any bipartite graph (there are none):")
path = SimpleGraph.from_edges(4, [(1, 2), (2, 3), (3, 4)])
print(" ", saturating_vectors(path, 3))
print()

print("facets of the degree complex (signed exponents localize):")
g = SimpleGraph.from_edges(5, [(1, 2), (1, 3), (2, 3), (3, 4), (4, 5)])
print("  a = (1,1,1,0,-1), t = 2:", [sorted(f) for f in facets_delta(g, (1, 1, 1, 0, -1), 2)])
print("  (the empty facet: the localized monomial sits in the saturation gap)")
print("  a = (4,4,4), t = 2 on the triangle:", facets_delta(triangle, (4, 4, 4), 2))
