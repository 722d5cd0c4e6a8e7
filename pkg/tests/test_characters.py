from itertools import chain, permutations

import pytest

from ospkron.characters import (
    LaurentPolynomial,
    character,
    decompose_via_characters,
    group_dim,
    oracle_matches,
    split_decomposition,
    verify_product,
)
from ospkron.modification import GroupContext, kronecker
from ospkron.partitions import partitions_of

SO5 = GroupContext("SO", 5)
SO4 = GroupContext("SO", 4)
SP4 = GroupContext("Sp", 4)
O4 = GroupContext("O", 4)


def test_trivial_character_is_one():
    for ctx in (SO5, SP4, SO4):
        chi = character((), ctx)
        assert chi == LaurentPolynomial.constant(1, ctx.rank)


def test_vector_representation():
    chi = character((1,), SO5)
    assert len(chi.terms) == 5
    assert chi.at_identity() == 5


def test_identity_specialization_equals_dim():
    labels = [(2, 1), (2, 2), (3,), (1, 1)]
    for ctx in (SO5, SP4, SO4):
        for lam in labels:
            assert character(lam, ctx).at_identity() == group_dim(lam, ctx)


def test_group_dims():
    assert group_dim((1,), SP4) == 4
    assert group_dim((2, 1), SO5) == 35
    assert group_dim((1, 1), SO5) == 10
    # D_2 = A1 x A1: [3,+/-2] each has dimension (3+2+1)(3-2+1)/... = 12.
    assert group_dim((3, 2), O4) == 24
    assert group_dim((3, -2), O4) == 12
    assert group_dim((3, -2), SO4) == 12


def test_d2_factorizes_as_a1_a1():
    # dim[a,+/-b] over SO(4) = (a+b+1)(a-b+1), the product of two su(2)
    # strings; unsigned full-rank labels sum the split pair.
    for a in range(4):
        assert group_dim((a,) if a else (), SO4) == (a + 1) ** 2
        for b in range(1, a + 1):
            assert group_dim((a, -b), SO4) == (a + b + 1) * (a - b + 1)
            assert group_dim((a, b), SO4) == 2 * (a + b + 1) * (a - b + 1)


EQ18 = {
    (3, 2): 1, (2, 2, 1): 1, (2, 1, 1, 1): 1, (3, 1, 1): 1,
    (3,): 1, (2, 1): 2, (1, 1, 1): 1, (1,): 1,
}


def test_verify_product_golden():
    so9 = GroupContext("SO", 9)
    dec19c = kronecker((2, 1), (1, 1), GroupContext("O", 5))
    assert verify_product((2, 1), (1, 1), SO5, dec19c)
    assert verify_product((2, 1), (1, 1), so9, EQ18)


def test_verify_product_catches_perturbation():
    so9 = GroupContext("SO", 9)
    bad = dict(EQ18)
    bad[(2, 1)] = 1
    report = verify_product((2, 1), (1, 1), so9, bad)
    assert not report
    assert report.difference


def test_decompose_examples():
    assert decompose_via_characters((1,), (1,), SO5) == {(2,): 1, (1, 1): 1, (): 1}
    assert decompose_via_characters((2, 1), (1, 1), SO5) == {
        (3, 2): 1, (2, 2): 1, (2,): 1, (3, 1): 1,
        (3,): 1, (2, 1): 2, (1, 1): 1, (1,): 1,
    }
    assert decompose_via_characters((2, 1), (1, 1), SP4) == {
        (3, 2): 1, (3,): 1, (2, 1): 1, (1,): 1,
    }


def test_decompose_symmetric_and_verified():
    pairs = [((2, 1), (1, 1)), ((2,), (2,)), ((1, 1), (1, 1))]
    for ctx in (SO5, SP4, SO4):
        for lam1, lam2 in pairs:
            dec = decompose_via_characters(lam1, lam2, ctx)
            assert dec == decompose_via_characters(lam2, lam1, ctx)
            assert all(m > 0 for m in dec.values())


def test_so4_split_labels_in_oracle():
    # Over SO(4) the oracle works at signed-label granularity; the folded
    # product matches it only after splitting full-rank labels.
    dec = kronecker((2, 1), (1, 1), O4)
    assert oracle_matches((2, 1), (1, 1), O4, dec)
    split = split_decomposition(dec, O4)
    assert split[(3, 2)] == 1 and split[(3, -2)] == 1


def test_weyl_invariance():
    # Characters are symmetric under variable permutation and inversion
    # (any signs for B/C; an even number of sign flips for D).
    for ctx, lam in [(SO5, (2, 1)), (SP4, (2, 1))]:
        chi = character(lam, ctx)
        for perm in permutations(range(ctx.rank)):
            for invert in [(False, True), (True, True), (False, False)]:
                assert chi.substitute(perm, invert) == chi
    chi = character((2, 1), SO4)
    for perm in permutations(range(2)):
        for invert in [(True, True), (False, False)]:
            assert chi.substitute(perm, invert) == chi


def test_caps_enforced(monkeypatch):
    monkeypatch.setenv("OSPKRON_RANK_CAP", "4")
    monkeypatch.setenv("OSPKRON_BOX_CAP", "8")
    with pytest.raises(ValueError):
        character((1,), GroupContext("SO", 11))  # rank 5
    with pytest.raises(ValueError):
        character((9,), SO5)  # 9 boxes in one label


def test_character_product_symmetry():
    labels = [
        lam
        for lam in chain.from_iterable(partitions_of(n) for n in range(4))
        if len(lam) <= SO5.rank
    ]
    for lam1 in labels:
        for lam2 in labels:
            a = character(lam1, SO5) * character(lam2, SO5)
            b = character(lam2, SO5) * character(lam1, SO5)
            assert a == b
