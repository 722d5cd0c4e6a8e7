"""Walkthrough: the Brauer-algebra consistency layer.

Run:  python3 demos/brauer_consistency.py
"""

from math import prod

from ospkron import (
    BrauerLabel,
    brauer_dim,
    format_partition,
    verify_induced_dim,
)
from ospkron.brauer import level_shapes

# Irrep dimensions at each level are oscillating-tableau counts; their
# squares must sum to (2f-1)!!, the dimension of the semisimple algebra.
for f in range(1, 7):
    dims = {s: brauer_dim(BrauerLabel(s, f)) for s in level_shapes(f)}
    total = sum(d * d for d in dims.values())
    assert total == prod(range(2 * f - 1, 0, -2))
    print(f"level {f}: sum of dim^2 = {total} = (2*{f}-1)!!")

print()
print("level 3 dimensions:")
for s in level_shapes(3):
    print(f"  dim({format_partition(s)}; level 3) = {brauer_dim(BrauerLabel(s, 3))}")

# The induced-dimension ratio h: for [2] x [1] the six coset elements are
# recovered exactly; integrality is the designed consistency signal.
print()
for lam1, lam2 in [((2,), (1,)), ((1,), (1,)), ((2,), (2,))]:
    h = verify_induced_dim(lam1, lam2)
    print(f"h for {format_partition(lam1)} x {format_partition(lam2)} = {h}")

# Caveat: the ratio is NOT an integer for every pair -- contraction terms
# of mixed symmetry vanish from the product, so the naive dimension
# bookkeeping over-counts. [2] x [2,1] is the smallest fractional case.
h = verify_induced_dim((2,), (2, 1))
print(f"h for [2] x [2,1] = {h}  (non-integral: mixed-symmetry contractions vanish)")
