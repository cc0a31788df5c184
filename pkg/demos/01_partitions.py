"""
Partition combinatorics
=======================

Everything downstream is indexed by partitions: a weight-m basis monomial
of the rank-n free boson is a partition of m distributed over n labeled
slots.  This script walks the counting functions and the canonical
enumeration order the rest of the library relies on.
"""

from mta import (
    enumerate_labeled_partitions,
    enumerate_partitions,
    labeled_partition_count,
    partition_count,
    symmetry_factor,
)

# ---------------------------------------------------------------------------
# classical partition counts
# ---------------------------------------------------------------------------

print("p(m) for m = 0..10:")
print("  ", [partition_count(m) for m in range(11)])

print("\npartitions of 5, in enumeration order:")
for p in enumerate_partitions(5):
    print("  ", p)

# ---------------------------------------------------------------------------
# labeled partitions: one partition per generator slot
# ---------------------------------------------------------------------------

print("\nrank-2 labeled counts are the convolution of p with itself:")
print("  ", [labeled_partition_count(2, m) for m in range(8)])

print("\nall rank-2 labeled partitions of weight 2:")
for lp in enumerate_labeled_partitions(2, 2):
    print("  ", lp)

# ---------------------------------------------------------------------------
# symmetry factors
# ---------------------------------------------------------------------------

# the factor prod(l^m_l * m_l!) counts the ways a monomial contracts with
# itself; it shows up as the diagonal of the pairing matrix and as the
# denominators of the strong identity
print("\nsymmetry factors at weight 4 (rank 1):")
for lp in enumerate_labeled_partitions(1, 4):
    print(f"   {lp!r:16} {symmetry_factor(lp)}")
