"""Property suites, runnable in isolation: pytest tests/test_properties.py"""

from itertools import chain
from math import comb, factorial, prod

from hypothesis import given, settings, strategies as st

from ospkron.littlewood_richardson import lr_product, sym_dim
from ospkron.modification import GroupContext, SignedLabel, standardize
from ospkron.partitions import (
    boundary_strip,
    conjugate,
    hook_lengths,
    make_partition,
    partitions_of,
)


@st.composite
def partitions(draw, max_boxes=30):
    n = draw(st.integers(min_value=0, max_value=max_boxes))
    choices = partitions_of(n)
    return choices[draw(st.integers(min_value=0, max_value=len(choices) - 1))]


@given(partitions())
@settings(max_examples=1000, deadline=None)
def test_conjugate_is_an_involution(lam):
    assert conjugate(conjugate(lam)) == lam
    assert sum(conjugate(lam)) == sum(lam)


@given(partitions(max_boxes=16), st.integers(min_value=1, max_value=16))
@settings(max_examples=500, deadline=None)
def test_strip_removal_leaves_a_partition(lam, h):
    strip = boundary_strip(lam, h)
    if strip is None:
        return
    inner = strip.inner
    assert make_partition(inner) == inner
    assert sum(inner) == sum(lam) - h
    assert len(strip.boxes) == h
    rows = {r for r, _ in strip.boxes}
    assert rows == set(range(min(rows), max(rows) + 1))  # contiguous rows


def test_hook_length_dimensions_are_integers():
    for f in range(13):
        for lam in partitions_of(f):
            hooks = prod(h for row in hook_lengths(lam) for h in row)
            assert factorial(f) % hooks == 0


def _labels(max_boxes):
    return list(chain.from_iterable(partitions_of(n) for n in range(max_boxes + 1)))


def test_lr_symmetry():
    labels = _labels(5)
    for i, lam in enumerate(labels):
        for mu in labels[i:]:
            assert lr_product(lam, mu) == lr_product(mu, lam)


def test_lr_dimension_identity():
    # sum of c * dim(nu) over the product equals dim(lam)*dim(mu)*binom(f,f1).
    labels = _labels(5)
    for lam in labels:
        for mu in labels:
            f1, f2 = sum(lam), sum(mu)
            total = sum(c * sym_dim(nu) for nu, c in lr_product(lam, mu).items())
            assert total == sym_dim(lam) * sym_dim(mu) * comb(f1 + f2, f1)


def test_standardize_idempotence():
    contexts = [GroupContext("O", n) for n in range(3, 9)]
    contexts += [GroupContext("Sp", n) for n in (4, 6, 8)]
    for ctx in contexts:
        for lam in _labels(6):
            if ctx.is_standard(lam):
                assert standardize(lam, ctx) == SignedLabel(lam, 1)
