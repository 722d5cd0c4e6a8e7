"""Stable (large-n) Kronecker product via trace contractions.

For each k, a k-fold trace contraction pairs k boxes of one factor with
k boxes of the other; paired boxes carry a common symmetry type, so the
sum runs over a shared removed partition delta of k applied to both
factors through skew expansion. Each contracted pair of residual
diagrams is then multiplied with the Littlewood-Richardson rule.
"""

from dataclasses import dataclass
from functools import cache

from .littlewood_richardson import Decomposition, lr_product, skew_expand
from .partitions import Partition, partitions_of


@dataclass(frozen=True)
class ContractionTerm:
    k: int
    delta: Partition
    alpha: Partition
    beta: Partition
    coeff: int


def contraction_terms(lam1: Partition, lam2: Partition, k: int) -> list[ContractionTerm]:
    """All k-fold contractions: shared delta of k boxes removed from both
    factors, with the product of the two skew multiplicities as coefficient."""
    if k > min(sum(lam1), sum(lam2)):
        raise ValueError("k exceeds a factor's box count")
    terms = []
    for delta in partitions_of(k):
        left = skew_expand(lam1, delta)
        if not left:
            continue
        right = skew_expand(lam2, delta)
        if not right:
            continue
        for alpha, c1 in left.items():
            for beta, c2 in right.items():
                terms.append(ContractionTerm(k, delta, alpha, beta, c1 * c2))
    return terms


@cache
def stable_kronecker(lam1: Partition, lam2: Partition) -> Decomposition:
    """Kronecker product valid for all sufficiently large n:
    sum over k of all contraction terms expanded by the LR rule."""
    out: Decomposition = {}
    for k in range(min(sum(lam1), sum(lam2)) + 1):
        for term in contraction_terms(lam1, lam2, k):
            for nu, c in lr_product(term.alpha, term.beta).items():
                out[nu] = out.get(nu, 0) + term.coeff * c
    return out
