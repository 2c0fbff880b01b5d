"""Walk through the five-vertex example: a triangle with a tail.

The graph has edges {1,2},{1,3},{2,3},{3,4},{4,5}.  Its square I^2 has one
embedded prime, P_{1,2,3,4}, and crucially the maximal ideal is NOT
associated even though N[{1,2,3,4}] is the whole vertex set.
"""

from edgesat import (
    SimpleGraph,
    ass_primes,
    ass_primes_2,
    closed_neighborhood,
    core_of_cover,
    covers_minimal_over,
    is_associated,
    minimal_covers,
)
from edgesat.census import oracle_ass

g = SimpleGraph.from_edges(5, [(1, 2), (1, 3), (2, 3), (3, 4), (4, 5)])

print("graph: triangle {1,2,3} with tail 3-4-5")
print()

print("minimal covers (the minimal primes of every power):")
for c in minimal_covers(g):
    print("   ", sorted(c))
print()

tri = {1, 2, 3}
print("closed neighbourhood of the triangle:", sorted(closed_neighborhood(g, tri)))
print("covers minimal over it:", [sorted(f) for f in covers_minimal_over(g, closed_neighborhood(g, tri))])
print("-> P_{1,2,3,4} is the unique embedded associated prime of I^2")
print()

print("why the maximal ideal is not associated to I^2:")
print("  core({1,2,3,4,5}) =", sorted(core_of_cover(g, {1, 2, 3, 4, 5})))
print("  a witness would need a 2-saturating weighted graph, i.e. a triangle,")
print("  but V is not minimal among the covers containing N[{1,2,3}] = {1,2,3,4}.")
print("  is_associated(V, t=2):", is_associated(g, {1, 2, 3, 4, 5}, 2))
print()

witness = is_associated(g, {1, 2, 3, 4}, 2)
print("certificate for P_{1,2,3,4}:", witness.evidence)
print()

formula = {frozenset(r.vertices) for r in ass_primes(g, 2)}
closed = {frozenset(r.vertices) for r in ass_primes_2(g)}
oracle = oracle_ass(g, 2)
print("Ass(I^2) three ways (general formula / t=2 closed form / ideal oracle):")
for name, primes in (("formula", formula), ("closed", closed), ("oracle", oracle)):
    print(f"  {name:8}", sorted(sorted(p) for p in primes))
assert formula == closed == oracle
print("all three agree.")
