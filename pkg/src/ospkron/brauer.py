"""Brauer-algebra consistency layer.

Irreps of the level-f Brauer algebra carry a partition with f, f-2, f-4,
... boxes. Dimensions are obtained by counting oscillating tableaux
(paths in the Bratteli diagram built from the branching rule), which
gives an independent cross-check on the diagrammatic product: the total
induced dimension must factor through the symmetric-group dimensions.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import cache

from .littlewood_richardson import sym_dim
from .partitions import Partition, add_one_box, conjugate, partitions_of, remove_one_box


@dataclass(frozen=True)
class BrauerLabel:
    shape: Partition
    level: int

    def __post_init__(self):
        f, k = self.level, sum(self.shape)
        if k > f or (f - k) % 2 != 0:
            raise ValueError(f"shape {self.shape} not reachable at level {f}")


def level_shapes(f: int) -> list[Partition]:
    """All shapes occurring at level f: partitions of f, f-2, f-4, ..."""
    out: list[Partition] = []
    n = f
    while n >= 0:
        out.extend(partitions_of(n))
        n -= 2
    return out


def branch(label: BrauerLabel) -> list[BrauerLabel]:
    """Restriction to level f-1: remove a box always, add one if the shape
    has fewer than ``level`` boxes."""
    if label.level < 1:
        raise ValueError("no level below 0")
    shapes = list(remove_one_box(label.shape))
    if sum(label.shape) < label.level:
        shapes.extend(add_one_box(label.shape))
    return [BrauerLabel(s, label.level - 1) for s in shapes]


@cache
def _path_counts(f: int) -> dict[Partition, int]:
    """Number of oscillating tableaux from the empty shape to each shape
    at level f (dynamic programming up the Bratteli diagram)."""
    if f == 0:
        return {(): 1}
    prev = _path_counts(f - 1)
    counts: dict[Partition, int] = {}
    for shape in level_shapes(f):
        total = sum(prev.get(mu, 0) for mu in remove_one_box(shape))
        if sum(shape) < f:
            total += sum(prev.get(mu, 0) for mu in add_one_box(shape))
        if total:
            counts[shape] = total
    return counts


def brauer_dim(label: BrauerLabel) -> int:
    """Dimension of the Brauer-algebra irrep, by path counting."""
    return _path_counts(label.level)[label.shape]


def is_n_permissible(lam: Partition, n: int) -> bool:
    """Nonvanishing-dimension condition on the diagram.

    n > 0 (orthogonal): first two columns hold at most n boxes.
    n = -2m (symplectic): at most m columns.
    n odd negative: first two rows hold at most 2-n boxes.
    """
    if n in (0, -1):
        raise ValueError("n must not be 0 or -1")
    if n > 0:
        cols = conjugate(lam)
        c1 = cols[0] if cols else 0
        c2 = cols[1] if len(cols) > 1 else 0
        return c1 + c2 <= n
    if n % 2 == 0:
        m = -n // 2
        return (lam[0] if lam else 0) <= m
    r1 = lam[0] if lam else 0
    r2 = lam[1] if len(lam) > 1 else 0
    return r1 + r2 <= 2 - n


def is_semisimple(n: int, f: int) -> bool:
    """Semisimplicity of the level-f Brauer algebra over C.

    For positive integer n this is n >= f-1. For negative n (symplectic
    specialization) the same bound is applied to |n|; this reading is
    advisory, see the package docs.
    """
    return abs(n) >= f - 1


def verify_induced_dim(lam1: Partition, lam2: Partition) -> Fraction:
    """Coset count h recovered from the induced-dimension identity.

    h * dim(lam1) * dim(lam2) = sum over the stable product of
    multiplicity times the Brauer dimension at level |lam1| + |lam2|.
    Integrality of the result is the consistency check.
    """
    from .stable_product import stable_kronecker

    f = sum(lam1) + sum(lam2)
    total = sum(
        mult * brauer_dim(BrauerLabel(shape, f))
        for shape, mult in stable_kronecker(lam1, lam2).items()
    )
    return Fraction(total, sym_dim(lam1) * sym_dim(lam2))
