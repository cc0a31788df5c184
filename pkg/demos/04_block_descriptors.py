"""
Block descriptors for the degree-d algebras
===========================================

The degree-d algebra of a well-behaved graded theory decomposes into matrix
blocks indexed by levels j <= d.  In the semisimple case each simple graded
module contributes one scalar block per level, sized by its graded
dimension there; the free boson instead contributes matrix blocks over a
polynomial ring, sized by labeled partition counts.
"""

from fractions import Fraction

from mta import (
    SimpleModuleData,
    exceptional_degrees,
    heisenberg_zhu_descriptor,
    labeled_partition_count,
    rational_zhu_descriptor,
    zd_support,
)

# ---------------------------------------------------------------------------
# a semisimple example with three simple modules
# ---------------------------------------------------------------------------

modules = [
    SimpleModuleData("vac", (1, 0, 1, 1), Fraction(0)),
    SimpleModuleData("psi", (1, 1, 1, 1), Fraction(1, 2)),
    SimpleModuleData("sigma", (1, 1, 2, 2), Fraction(1, 16)),
]

for d in range(3):
    desc = rational_zhu_descriptor(modules, d)
    print(desc.render_text())
    print("   level-d ideal supported on:", zd_support(modules, d))

# total dimension is the sum of squares of the block sizes
desc = rational_zhu_descriptor(modules, 2)
print("total dimension at degree 2:", desc.total_scalar_dimension())

# ---------------------------------------------------------------------------
# the free boson: polynomial-ring blocks
# ---------------------------------------------------------------------------

print()
for n, d in ((1, 5), (2, 3)):
    desc = heisenberg_zhu_descriptor(n, d)
    print(desc.render_text())

# ---------------------------------------------------------------------------
# exceptional degrees
# ---------------------------------------------------------------------------

# the vacuum module above skips level 1, so degree 1 is exceptional for it:
# the degree-1 algebra and its corner ideal are zero rings
print("\nexceptional degrees of (1,0,1,1):", exceptional_degrees((1, 0, 1, 1), 3))

# the free boson never vanishes
dims = [labeled_partition_count(1, j) for j in range(9)]
print("free-boson exceptional degrees through 8:", exceptional_degrees(dims, 8))
