"""Littlewood-Richardson coefficients, outer products and skew expansions.

Coefficients are computed by direct enumeration of LR skew tableaux:
column-strict fillings of nu/lambda with content mu whose reverse reading
word is a lattice word. Exact integers throughout.
"""

from functools import cache
from math import factorial, prod

from .partitions import (
    Partition,
    conjugate,
    contains,
    hook_lengths,
    make_partition,
    partitions_of,
)

Decomposition = dict[Partition, int]


@cache
def lr_coefficient(lam: Partition, mu: Partition, nu: Partition) -> int:
    """Multiplicity of nu in the outer product lam x mu."""
    if sum(nu) != sum(lam) + sum(mu) or not contains(nu, lam):
        return 0
    if not mu:
        return 1 if nu == lam else 0
    return _count_lr_fillings(lam, mu, nu)


def _count_lr_fillings(lam: Partition, mu: Partition, nu: Partition) -> int:
    """Count LR tableaux of shape nu/lam and content mu.

    Cells are filled in reverse reading order (top row first, right to
    left within each row), so the lattice condition can be checked as
    each entry is placed.
    """
    rows = len(nu)
    lam_padded = lam + (0,) * (rows - len(lam))
    cells = []
    for i in range(rows):
        for j in range(nu[i] - 1, lam_padded[i] - 1, -1):
            cells.append((i, j))

    nlabels = len(mu)
    remaining = list(mu)
    # entry[i][j] for skew cells only; 0 = unfilled
    entry: dict[tuple[int, int], int] = {}
    counts = [0] * (nlabels + 1)  # counts[k] = number of k's placed so far

    def place(idx: int) -> int:
        if idx == len(cells):
            return 1
        i, j = cells[idx]
        lo, hi = 1, nlabels
        # Column-strict: strictly greater than the entry above.
        above = entry.get((i - 1, j))
        if i > 0 and j >= lam_padded[i - 1]:
            lo = max(lo, above + 1)
        elif i > 0:
            # Cell above is in lam; no constraint beyond row bound below.
            pass
        # Row-weak: at most the entry to the right (filled earlier).
        right = entry.get((i, j + 1))
        if right is not None:
            hi = min(hi, right)
        total = 0
        for k in range(lo, hi + 1):
            if remaining[k - 1] == 0:
                continue
            # Lattice: after placing k, #k must not exceed #(k-1).
            if k > 1 and counts[k] + 1 > counts[k - 1]:
                continue
            entry[(i, j)] = k
            counts[k] += 1
            remaining[k - 1] -= 1
            total += place(idx + 1)
            remaining[k - 1] += 1
            counts[k] -= 1
            del entry[(i, j)]
        return total

    return place(0)


@cache
def lr_product(lam: Partition, mu: Partition) -> Decomposition:
    """Full outer-product expansion of lam x mu as {nu: multiplicity}."""
    n = sum(lam) + sum(mu)
    out: Decomposition = {}
    for nu in partitions_of(n):
        if len(nu) > len(lam) + len(mu):
            continue
        c = lr_coefficient(lam, mu, nu)
        if c:
            out[nu] = c
    return out


@cache
def skew_expand(lam: Partition, delta: Partition) -> Decomposition:
    """Expansion of the skew diagram lam/delta: {alpha: c^lam_{delta,alpha}}."""
    if not contains(lam, delta):
        return {}
    n = sum(lam) - sum(delta)
    out: Decomposition = {}
    for alpha in partitions_of(n):
        c = lr_coefficient(delta, alpha, lam)
        if c:
            out[alpha] = c
    return out


def sym_dim(lam: Partition) -> int:
    """Dimension of the symmetric-group irrep: |lam|! over the hook product."""
    hooks = prod(h for row in hook_lengths(lam) for h in row)
    return factorial(sum(lam)) // hooks


def sort_terms(dec: Decomposition) -> list[tuple[Partition, int]]:
    """Deterministic term order: box count descending, then lexicographic."""
    return sorted(dec.items(), key=lambda kv: (-sum(kv[0]), kv[0]))


def normalize(dec: Decomposition) -> Decomposition:
    """Drop zero multiplicities."""
    return {k: v for k, v in dec.items() if v != 0}
