"""Exact Kronecker-product decompositions for O(n), SO(n) and Sp(2m).

The pipeline: a stable (large-n) product built from trace contractions
and the Littlewood-Richardson rule, folded down to a specific group by
signed boundary-strip standardization, cross-checked by a Brauer-algebra
dimension identity and certified against exact Weyl characters.
"""

from .partitions import (
    Partition,
    SkewStrip,
    boundary_strip,
    conjugate,
    contains,
    format_partition,
    hook_lengths,
    make_partition,
    parse_partition,
    partitions_of,
)
from .littlewood_richardson import (
    Decomposition,
    lr_coefficient,
    lr_product,
    skew_expand,
    sort_terms,
    sym_dim,
)
from .brauer import (
    BrauerLabel,
    branch,
    brauer_dim,
    is_n_permissible,
    is_semisimple,
    verify_induced_dim,
)
from .stable_product import ContractionTerm, contraction_terms, stable_kronecker
from .modification import (
    GroupContext,
    NonstandardInput,
    SignedLabel,
    kronecker,
    so_even_split,
    standardize,
)
from .characters import (
    AlternantDivisionError,
    LaurentPolynomial,
    NonterminationGuard,
    character,
    decompose_via_characters,
    group_dim,
    oracle_matches,
    split_decomposition,
    verify_product,
)

__version__ = "0.1.0"

__all__ = [
    "Partition",
    "SkewStrip",
    "boundary_strip",
    "conjugate",
    "contains",
    "format_partition",
    "hook_lengths",
    "make_partition",
    "parse_partition",
    "partitions_of",
    "Decomposition",
    "lr_coefficient",
    "lr_product",
    "skew_expand",
    "sort_terms",
    "sym_dim",
    "BrauerLabel",
    "branch",
    "brauer_dim",
    "is_n_permissible",
    "is_semisimple",
    "verify_induced_dim",
    "ContractionTerm",
    "contraction_terms",
    "stable_kronecker",
    "GroupContext",
    "NonstandardInput",
    "SignedLabel",
    "kronecker",
    "so_even_split",
    "standardize",
    "AlternantDivisionError",
    "LaurentPolynomial",
    "NonterminationGuard",
    "character",
    "decompose_via_characters",
    "group_dim",
    "oracle_matches",
    "split_decomposition",
    "verify_product",
]
