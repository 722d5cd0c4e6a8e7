"""Group-specific reduction of stable decompositions.

A stable-product label with more rows than the group rank is folded down
by repeatedly removing a boundary strip whose length is fixed by the row
count and the group (orthogonal: 2p - n; symplectic: 2p - n - 2),
accumulating a sign from the number of columns the strip spans. A label
is dropped (multiplicity zero) when the required strip does not exist or
its length is nonpositive.

Orthogonal outputs are associate-reduced: a standard-but-tall label such
as [1,1,1] over O(4) emerges as its associate [1], which is exactly what
an SO-level character check certifies. SO(2l) labels with a full set of
l rows split into a pair distinguished by the sign of the last row.
"""

from dataclasses import dataclass

from .littlewood_richardson import Decomposition, normalize
from .partitions import Partition, boundary_strip
from .stable_product import stable_kronecker


class NonstandardInput(ValueError):
    """An input label is not standard for the requested group."""


@dataclass(frozen=True)
class GroupContext:
    """A classical group family (O, SO or Sp) with its vector dimension."""

    family: str  # "O" | "SO" | "Sp"
    dimension: int

    def __post_init__(self):
        if self.family not in ("O", "SO", "Sp"):
            raise ValueError(f"unknown family {self.family!r}")
        if self.dimension < 2:
            raise ValueError("dimension must be >= 2")
        if self.family == "Sp" and self.dimension % 2 != 0:
            raise ValueError("Sp dimension must be even")

    @property
    def rank(self) -> int:
        return self.dimension // 2

    def is_standard(self, lam: Partition) -> bool:
        return len(lam) <= self.rank

    def __str__(self):
        return f"{self.family}({self.dimension})"


@dataclass(frozen=True)
class SignedLabel:
    shape: Partition
    sign: int  # +1, -1, or 0 for the dropped label

    @classmethod
    def zero(cls) -> "SignedLabel":
        return cls((), 0)


SoEvenLabel = tuple[int, ...]


def standardize(lam: Partition, ctx: GroupContext) -> SignedLabel:
    """Fold a label with too many rows down to a standard one, or to zero.

    Iterates boundary-strip removal; the strip length at each step is
    2p - n (orthogonal) or 2p - n - 2 (symplectic) for the current row
    count p. The sign contribution of a strip spanning c columns is
    (-1)^(c-1) for orthogonal groups and (-1)^c for symplectic ones.
    """
    result, _ = standardize_steps(lam, ctx)
    return result


def standardize_steps(lam: Partition, ctx: GroupContext):
    """Like :func:`standardize`, also returning the removal steps as a
    list of (strip, sign_factor) pairs for tracing."""
    n, l = ctx.dimension, ctx.rank
    sign = 1
    steps = []
    while len(lam) > l:
        p = len(lam)
        h = 2 * p - n - (2 if ctx.family == "Sp" else 0)
        if h <= 0:
            return SignedLabel.zero(), steps
        strip = boundary_strip(lam, h)
        if strip is None:
            return SignedLabel.zero(), steps
        c = strip.columns_spanned
        factor = (-1) ** (c - 1) if ctx.family != "Sp" else (-1) ** c
        steps.append((strip, factor))
        sign *= factor
        lam = strip.inner
    return SignedLabel(lam, sign), steps


def kronecker(lam1: Partition, lam2: Partition, ctx: GroupContext) -> Decomposition:
    """Group-level Kronecker product: stable product, then per-term
    standardization with signed accumulation. The result is nonnegative."""
    for lam in (lam1, lam2):
        if not ctx.is_standard(lam):
            raise NonstandardInput(f"{lam} is not standard for {ctx}")
    out: Decomposition = {}
    for shape, mult in stable_kronecker(lam1, lam2).items():
        reduced = standardize(shape, ctx)
        if reduced.sign:
            key = reduced.shape
            out[key] = out.get(key, 0) + reduced.sign * mult
    out = normalize(out)
    assert all(m > 0 for m in out.values()), "signed cancellation went negative"
    return out


def so_even_split(lam: Partition, l: int) -> list[SoEvenLabel]:
    """SO(2l) reduction of an O(2l) label: a label with l nonzero rows
    splits into the pair with last row +lam_l and -lam_l; shorter labels
    stay single (zero-padded to length l)."""
    if len(lam) > l:
        raise ValueError("label has more rows than the rank")
    padded = lam + (0,) * (l - len(lam))
    if len(lam) == l and l > 0:
        return [padded, padded[:-1] + (-padded[-1],)]
    return [padded]
