"""
Even lattices and their graded modules
======================================

An even positive-definite Gram matrix determines a family of simple graded
modules, one per coset of the lattice inside its dual.  The conformal
weight of a coset is the minimal norm over its vectors; graded dimensions
count lattice layers dressed by oscillator states.

The running example is the rank-1 lattice with Gram matrix [[8]], whose
eight cosets realize the familiar weight table (0, 1/16, 1/4, 9/16, 1, ...).
"""

import os

from mta import (
    EvenLattice,
    conformal_weight,
    count_norm_layer,
    dual_cosets,
    graded_dims,
    load_gram,
)

here = os.path.dirname(__file__)
lattice = load_gram(os.path.join(here, "z8.gram"))
print(f"rank {lattice.rank}, determinant {lattice.determinant()}")

# ---------------------------------------------------------------------------
# dual cosets and conformal weights
# ---------------------------------------------------------------------------

cosets = dual_cosets(lattice)
print(f"\n{len(cosets)} cosets of the lattice in its dual:")
for rep in cosets:
    w = conformal_weight(lattice, rep.vector)
    vec = ", ".join(str(x) for x in rep.vector)
    print(f"   coset {rep.index}: ({vec})  weight {w}")

# ---------------------------------------------------------------------------
# graded dimensions
# ---------------------------------------------------------------------------

print("\ngraded dimensions through level 4:")
for rep in cosets:
    dims = graded_dims(lattice, rep.vector, 4)
    print(f"   coset {rep.index}: {dims}")

# the half-shift coset starts two-dimensional because +1/2 and -1/2 both
# have the minimal norm
half = cosets[4].vector
print("\nvectors of minimal norm in the half-shift coset:",
      count_norm_layer(lattice, half, conformal_weight(lattice, half)))

# ---------------------------------------------------------------------------
# a rank-2 comparison
# ---------------------------------------------------------------------------

square = EvenLattice.from_rows([[2, 0], [0, 2]])
zero = dual_cosets(square)[0].vector
print("\nrank-2 square lattice, vacuum coset dims:",
      graded_dims(square, zero, 3))
# level 1 counts two oscillators plus the four lattice vectors of norm 1
