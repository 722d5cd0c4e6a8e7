"""Walkthrough: from the Littlewood-Richardson product to group-specific
Kronecker decompositions.

Run:  python3 demos/stable_vs_modified.py
"""

from ospkron import (
    GroupContext,
    format_partition,
    kronecker,
    lr_product,
    sort_terms,
    stable_kronecker,
    standardize,
)


def show(title, dec):
    terms = " + ".join(
        (f"{m}" if m != 1 else "") + format_partition(s) for s, m in sort_terms(dec)
    )
    print(f"{title:28s} {terms or '0'}")


lam1, lam2 = (2, 1), (1, 1)
print(f"Factors: {format_partition(lam1)} x {format_partition(lam2)}\n")

# Step 1: the plain outer product (valid for U(n)).
show("LR outer product:", lr_product(lam1, lam2))

# Step 2: the stable Kronecker product adds trace-contracted terms with
# 2k fewer boxes; it is the exact answer for any O(n) with n >= 8.
show("stable product:", stable_kronecker(lam1, lam2))

# Step 3: for a specific small group, every label with too many rows is
# folded down by signed boundary-strip removal and the signs cancel.
print()
for family, n in [("O", 7), ("O", 6), ("O", 5), ("O", 4), ("Sp", 6), ("Sp", 4)]:
    ctx = GroupContext(family, n)
    show(f"{ctx}:", kronecker(lam1, lam2, ctx))

# The signed bookkeeping behind the Sp(4) line: the stable term [2,1,1,1]
# folds to -[2,1], cancelling one of the two stable [2,1] terms.
print()
ctx = GroupContext("Sp", 4)
for shape in [(2, 1, 1, 1), (2, 2, 1), (3, 1, 1), (1, 1, 1)]:
    lab = standardize(shape, ctx)
    folded = "0" if lab.sign == 0 else f"{'-' if lab.sign < 0 else '+'}{format_partition(lab.shape)}"
    print(f"standardize {format_partition(shape):10s} over {ctx}: {folded}")
