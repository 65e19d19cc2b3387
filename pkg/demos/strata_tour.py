"""
Boundary strata and housing data
================================

A compact type boundary stratum is a stable tree of vertices with
genera.  Its pairing behavior is captured by the partition of nonzero
per-vertex socle dimensions 2g(v)-3+n(v), the housing data.  This tour
builds trees by hand, tests the housing predicate, reconstructs a
witness tree for a housing partition, and enumerates decorated
generators.
"""

from soclerank import (
    DecoratedTree,
    build_housing_tree,
    enumerate_boundary_generators,
    enumerate_pure_housing_partitions,
    housing_data,
    is_housing_partition,
)

# two elliptic tails on a genus 2 core
tree = DecoratedTree(genera=(2, 1, 1), edges=((0, 1), (0, 2)))
print("genus:", tree.genus)
print("housing data:", housing_data(tree))

# stability is enforced: a genus 0 leaf is rejected
try:
    DecoratedTree((1, 0), ((0, 1),))
except ValueError as exc:
    print("rejected:", exc)

# the housing predicate: short partitions always occur, borderline
# length needs at least two even parts
print()
for sigma, g in (((2, 2), 4), ((3, 1), 4), ((4,), 5), ((1, 1, 1, 1), 5)):
    print("is_housing_partition(%r, g=%d): %s" % (sigma, g, is_housing_partition(sigma, g, 4)))

# every housing partition has an explicit witness tree
witness = build_housing_tree((2, 2), 4, 4)
print()
print("witness for (2,2) at g=4:", witness.genera, witness.edges)
assert housing_data(witness) == (2, 2)

# the pure strata of genus 5, degree 4, by housing data
print()
print("pure housing partitions, g=5 d=4:")
for sigma in sorted(enumerate_pure_housing_partitions(5, 4)):
    print("  ", sigma)

# decorated generators carry kappa and psi decorations per vertex;
# each is reported as reduced data (remainder, kappa, psi) per vertex
print()
print("reduced boundary generators, g=3 d=1:")
for data in enumerate_boundary_generators(3, 1):
    print("  ", data)
