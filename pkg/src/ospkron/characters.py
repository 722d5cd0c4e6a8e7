"""Independent ground truth: exact Weyl characters for B_l, C_l, D_l.

Characters are multivariate Laurent polynomials with integer
coefficients, computed as ratios of alternants. For odd orthogonal
groups the half-integer exponents are absorbed by doubling every
exponent, keeping all arithmetic in plain integers. Orthogonal labels
over an even dimension with a full set of rows are handled as the sum of
the split pair of characters.
"""

import os
from dataclasses import dataclass
from fractions import Fraction
from functools import cache
from itertools import permutations
from math import prod

from .littlewood_richardson import Decomposition
from .modification import GroupContext, so_even_split
from .partitions import Partition


class AlternantDivisionError(ArithmeticError):
    """Alternant ratio left a remainder; signals an implementation bug."""


class NonterminationGuard(RuntimeError):
    """Character-subtraction loop exceeded its iteration bound."""


def rank_cap() -> int:
    return int(os.environ.get("OSPKRON_RANK_CAP", "4"))


def box_cap() -> int:
    return int(os.environ.get("OSPKRON_BOX_CAP", "8"))


Monomial = tuple[int, ...]


class LaurentPolynomial:
    """Sparse Laurent polynomial: exponent vector -> integer coefficient."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict[Monomial, int] | None = None):
        self.terms = {m: c for m, c in (terms or {}).items() if c != 0}

    @classmethod
    def monomial(cls, exps: Monomial, coeff: int = 1) -> "LaurentPolynomial":
        return cls({tuple(exps): coeff})

    @classmethod
    def constant(cls, c: int, nvars: int) -> "LaurentPolynomial":
        return cls({(0,) * nvars: c})

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return isinstance(other, LaurentPolynomial) and self.terms == other.terms

    def __add__(self, other: "LaurentPolynomial") -> "LaurentPolynomial":
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) + c
        return LaurentPolynomial(out)

    def __sub__(self, other: "LaurentPolynomial") -> "LaurentPolynomial":
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) - c
        return LaurentPolynomial(out)

    def __mul__(self, other: "LaurentPolynomial") -> "LaurentPolynomial":
        out: dict[Monomial, int] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                key = tuple(a + b for a, b in zip(m1, m2))
                out[key] = out.get(key, 0) + c1 * c2
        return LaurentPolynomial(out)

    def scale(self, c: int) -> "LaurentPolynomial":
        return LaurentPolynomial({m: c * v for m, v in self.terms.items()})

    def substitute(self, perm: tuple[int, ...], invert: tuple[bool, ...]) -> "LaurentPolynomial":
        """Permute variables (x_i -> x_{perm[i]}) and invert the flagged ones."""
        out: dict[Monomial, int] = {}
        for m, c in self.terms.items():
            new = [0] * len(m)
            for i, e in enumerate(m):
                new[perm[i]] = -e if invert[i] else e
            key = tuple(new)
            out[key] = out.get(key, 0) + c
        return LaurentPolynomial(out)

    def at_identity(self) -> int:
        """Specialize every variable to 1 (sum of coefficients)."""
        return sum(self.terms.values())

    def leading(self) -> tuple[Monomial, int]:
        m = max(self.terms)
        return m, self.terms[m]

    def divide_exact(self, den: "LaurentPolynomial", guard: int = 2_000_000) -> "LaurentPolynomial":
        """Exact division; raises AlternantDivisionError on any remainder."""
        quot: dict[Monomial, int] = {}
        rem = LaurentPolynomial(dict(self.terms))
        dm, dc = den.leading()
        for _ in range(guard):
            if not rem:
                return LaurentPolynomial(quot)
            rm, rc = rem.leading()
            if rc % dc != 0:
                raise AlternantDivisionError(f"coefficient {rc} not divisible by {dc}")
            shift = tuple(a - b for a, b in zip(rm, dm))
            q = rc // dc
            quot[shift] = quot.get(shift, 0) + q
            rem = rem - den.scale(q).shifted(shift)
        raise AlternantDivisionError("division did not terminate")

    def shifted(self, shift: Monomial) -> "LaurentPolynomial":
        return LaurentPolynomial(
            {tuple(a + b for a, b in zip(m, shift)): c for m, c in self.terms.items()}
        )

    def __repr__(self):
        return f"LaurentPolynomial({self.terms!r})"


def _odd_alternant(exps: tuple[int, ...], l: int) -> LaurentPolynomial:
    """det over j of (x_j^e_i - x_j^-e_i), expanded by the Leibniz rule."""
    out: dict[Monomial, int] = {}
    for perm in permutations(range(l)):
        sign = _perm_sign(perm)
        # Expand the product of binomials (x_{perm[i]}^e_i - x_{perm[i]}^-e_i).
        for mask in range(1 << l):
            exp = [0] * l
            s = sign
            for i in range(l):
                if mask >> i & 1:
                    exp[perm[i]] = -exps[i]
                    s = -s
                else:
                    exp[perm[i]] = exps[i]
            key = tuple(exp)
            out[key] = out.get(key, 0) + s
    return LaurentPolynomial(out)


def _even_alternant(exps: tuple[int, ...], l: int) -> LaurentPolynomial:
    """det over j of (x_j^e_i + x_j^-e_i)."""
    out: dict[Monomial, int] = {}
    for perm in permutations(range(l)):
        sign = _perm_sign(perm)
        for mask in range(1 << l):
            exp = [0] * l
            for i in range(l):
                exp[perm[i]] = -exps[i] if mask >> i & 1 else exps[i]
            key = tuple(exp)
            out[key] = out.get(key, 0) + sign
    return LaurentPolynomial(out)


def _perm_sign(perm: tuple[int, ...]) -> int:
    sign = 1
    for i in range(len(perm)):
        for j in range(i + 1, len(perm)):
            if perm[i] > perm[j]:
                sign = -sign
    return sign


def _family_and_rank(ctx: GroupContext) -> tuple[str, int]:
    """Root-system family (B, C or D) and rank for a group context."""
    if ctx.family == "Sp":
        return "C", ctx.rank
    return ("D", ctx.rank) if ctx.dimension % 2 == 0 else ("B", ctx.rank)


def _check_caps(ctx: GroupContext, *labels) -> None:
    if ctx.rank > rank_cap():
        raise ValueError(f"rank {ctx.rank} exceeds cap {rank_cap()}")
    for lam in labels:
        if sum(abs(r) for r in lam) > box_cap():
            raise ValueError(f"label {lam} exceeds box cap {box_cap()}")


@cache
def _irreducible_character(family: str, l: int, weight: tuple[int, ...]) -> LaurentPolynomial:
    """Weyl character of the irrep with the given dominant integral weight.

    For D_l the last weight entry may be negative. B_l exponents are
    globally doubled.
    """
    if family == "B":
        mu = tuple(2 * weight[i] + 2 * (l - i - 1) + 1 for i in range(l))
        delta = tuple(2 * (l - i - 1) + 1 for i in range(l))
        return _odd_alternant(mu, l).divide_exact(_odd_alternant(delta, l))
    if family == "C":
        mu = tuple(weight[i] + l - i for i in range(l))
        delta = tuple(l - i for i in range(l))
        return _odd_alternant(mu, l).divide_exact(_odd_alternant(delta, l))
    # D_l: chi = (E_mu +/- O_mu) / E_delta, sign from the last entry.
    mu_abs = tuple(abs(weight[i]) + l - i - 1 for i in range(l))
    delta = tuple(l - i - 1 for i in range(l))
    num = _even_alternant(mu_abs, l)
    if weight[-1] != 0:
        odd = _odd_alternant(mu_abs, l)
        num = num + odd if weight[-1] > 0 else num - odd
    return num.divide_exact(_even_alternant(delta, l))


def character(label, ctx: GroupContext) -> LaurentPolynomial:
    """Exact character of a tensor-irrep label.

    ``label`` is a partition (at most ``rank`` rows) or, for even
    orthogonal contexts, an explicitly signed length-``rank`` tuple. An
    unsigned orthogonal label with a full set of rows over an even
    dimension yields the sum over its split pair.
    """
    family, l = _family_and_rank(ctx)
    _check_caps(ctx, label)
    if family == "D" and len(label) == l and any(r < 0 for r in label):
        return _irreducible_character(family, l, tuple(label))
    lam = tuple(label)
    if any(r < 0 for r in lam) or list(lam) != sorted(lam, reverse=True):
        raise ValueError(f"bad label {label} for {ctx}")
    if len(lam) > l:
        raise ValueError(f"label {label} has more than {l} rows")
    if family == "D":
        return sum(
            (_irreducible_character(family, l, w) for w in so_even_split(lam, l)),
            LaurentPolynomial.constant(0, l),
        )
    padded = lam + (0,) * (l - len(lam))
    return _irreducible_character(family, l, padded)


def _weyl_dim(family: str, l: int, weight: tuple[int, ...]) -> int:
    """Weyl dimension formula over the positive roots."""
    if family == "B":
        mu = [Fraction(2 * weight[i] + 2 * (l - i - 1) + 1, 2) for i in range(l)]
        delta = [Fraction(2 * (l - i - 1) + 1, 2) for i in range(l)]
        short = prod(m / d for m, d in zip(mu, delta))
    elif family == "C":
        mu = [Fraction(weight[i] + l - i) for i in range(l)]
        delta = [Fraction(l - i) for i in range(l)]
        short = prod(m / d for m, d in zip(mu, delta))
    else:
        mu = [Fraction(weight[i] + l - i - 1) for i in range(l)]
        delta = [Fraction(l - i - 1) for i in range(l)]
        short = Fraction(1)
    pairs = prod(
        (mu[i] ** 2 - mu[j] ** 2) / (delta[i] ** 2 - delta[j] ** 2)
        for i in range(l)
        for j in range(i + 1, l)
    )
    dim = short * pairs
    assert dim.denominator == 1 and dim > 0
    return int(dim)


def group_dim(label, ctx: GroupContext) -> int:
    """Dimension of the irrep; split orthogonal pairs are summed."""
    family, l = _family_and_rank(ctx)
    if family == "D" and len(label) == l and any(r < 0 for r in label):
        return _weyl_dim(family, l, tuple(label))
    lam = tuple(label)
    if family == "D":
        return sum(_weyl_dim(family, l, w) for w in so_even_split(lam, l))
    return _weyl_dim(family, l, lam + (0,) * (l - len(lam)))


@dataclass(frozen=True)
class ProductReport:
    ok: bool
    difference: LaurentPolynomial

    def __bool__(self):
        return self.ok


def verify_product(
    lam1: Partition, lam2: Partition, ctx: GroupContext, claimed: Decomposition
) -> ProductReport:
    """Exact polynomial check: chi(lam1) * chi(lam2) == sum of claimed terms."""
    lhs = character(lam1, ctx) * character(lam2, ctx)
    family, l = _family_and_rank(ctx)
    rhs = LaurentPolynomial.constant(0, l)
    for shape, mult in claimed.items():
        rhs = rhs + character(shape, ctx).scale(mult)
    diff = lhs - rhs
    return ProductReport(not diff, diff)


def _dominant(mono: Monomial, family: str) -> bool:
    if family == "D":
        head, last = mono[:-1], mono[-1]
        seq = head + (abs(last),)
    else:
        seq = mono
    return all(seq[i] >= seq[i + 1] for i in range(len(seq) - 1)) and seq[-1] >= 0


def decompose_via_characters(lam1: Partition, lam2: Partition, ctx: GroupContext):
    """Ground-truth decomposition by repeated subtraction of the highest
    surviving dominant-weight character.

    Returns {label: multiplicity}; labels are partitions for odd
    orthogonal and symplectic groups, signed length-``rank`` tuples for
    even orthogonal ones.
    """
    family, l = _family_and_rank(ctx)
    _check_caps(ctx, lam1, lam2)
    rem = character(lam1, ctx) * character(lam2, ctx)
    out: dict = {}
    for _ in range(100_000):
        if not rem:
            return out
        best = max(m for m in rem.terms if _dominant(m, family))
        mult = rem.terms[best]
        if mult <= 0:
            raise NonterminationGuard(f"negative multiplicity at weight {best}")
        if family == "B":
            assert all(e % 2 == 0 for e in best)
            weight = tuple(e // 2 for e in best)
        else:
            weight = best
        key = weight if family == "D" else _strip_zeros(weight)
        out[key] = out.get(key, 0) + mult
        rem = rem - _irreducible_character(family, l, weight).scale(mult)
    raise NonterminationGuard("iteration bound exceeded")


def _strip_zeros(w: tuple[int, ...]) -> Partition:
    while w and w[-1] == 0:
        w = w[:-1]
    return w


def split_decomposition(dec: Decomposition, ctx: GroupContext) -> dict:
    """Expand a partition-keyed decomposition to oracle label granularity:
    over an even orthogonal dimension every full-rank label splits into
    its signed pair; otherwise the decomposition is returned unchanged."""
    family, l = _family_and_rank(ctx)
    if family != "D":
        return dict(dec)
    out: dict = {}
    for shape, mult in dec.items():
        for w in so_even_split(shape, l):
            out[w] = out.get(w, 0) + mult
    return out


def oracle_matches(lam1: Partition, lam2: Partition, ctx: GroupContext, dec: Decomposition) -> bool:
    """True iff ``dec`` equals the character-derived decomposition term for term."""
    return split_decomposition(dec, ctx) == decompose_via_characters(lam1, lam2, ctx)
