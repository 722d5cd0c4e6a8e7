import pytest

from ospkron.partitions import (
    boundary_strip,
    conjugate,
    contains,
    format_partition,
    hook_lengths,
    make_partition,
    parse_partition,
    partitions_of,
    remove_one_box,
    add_one_box,
)


def test_parse_bracket_forms():
    assert parse_partition("[3,3,3,1]") == (3, 3, 3, 1)
    assert parse_partition("[0]") == ()
    assert parse_partition("[]") == ()
    assert parse_partition("[5]") == (5,)


def test_parse_exponent_shorthand():
    assert parse_partition("3^3,1") == (3, 3, 3, 1)
    assert parse_partition("2^2") == (2, 2)
    assert parse_partition("4,1^3") == (4, 1, 1, 1)


@pytest.mark.parametrize("bad", ["[3,5]", "[2,-1]", "[1,2", "x", "[1,,2]"])
def test_parse_rejects_garbage(bad):
    with pytest.raises(ValueError):
        parse_partition(bad)


def test_format_round_trip():
    for lam in [(), (1,), (3, 3, 3, 1), (5, 2, 1)]:
        assert parse_partition(format_partition(lam)) == lam


def test_make_partition_drops_zeros_and_validates():
    assert make_partition((3, 2, 0, 0)) == (3, 2)
    with pytest.raises(ValueError):
        make_partition((1, 2))


def test_conjugate_examples():
    assert conjugate((3, 3, 3, 1)) == (4, 3, 3)
    assert conjugate((2, 1, 1, 1)) == (4, 1)
    assert conjugate(()) == ()


def test_contains():
    assert contains((3, 2), (2, 2))
    assert contains((3, 2), ())
    assert not contains((3, 2), (1, 1, 1))


def test_hook_lengths_and_counts():
    hooks = hook_lengths((2, 1))
    assert sorted(h for row in hooks for h in row) == [1, 1, 3]
    assert hook_lengths(()) == []


def test_partitions_of_counts():
    # Partition numbers p(0..8) = 1,1,2,3,5,7,11,15,22.
    expected = [1, 1, 2, 3, 5, 7, 11, 15, 22]
    for n, count in enumerate(expected):
        assert len(partitions_of(n)) == count
    assert partitions_of(4, max_part=2) == ((2, 2), (2, 1, 1), (1, 1, 1, 1))


def test_box_moves():
    assert set(remove_one_box((2, 1))) == {(1, 1), (2,)}
    assert set(add_one_box((2, 1))) == {(3, 1), (2, 2), (2, 1, 1)}
    assert add_one_box(()) == [(1,)]


def test_boundary_strip_single_row_chain():
    # [3,3,3,1] with a length-1 strip: only the last row's foot box works.
    strip = boundary_strip((3, 3, 3, 1), 1)
    assert strip is not None
    assert strip.inner == (3, 3, 3)
    assert strip.boxes == ((4, 1),)
    assert strip.columns_spanned == 1


def test_boundary_strip_multirow():
    # [3,3,3] with h = 4: start in row 2, walk the rim through row 3.
    strip = boundary_strip((3, 3, 3), 4)
    assert strip is not None
    assert strip.inner == (3, 2)
    assert strip.columns_spanned == 3
    assert strip.rows_spanned == 2


def test_boundary_strip_missing():
    # No boundary strip of length 3 starts at the foot of column 1 of [3,3,3,1].
    assert boundary_strip((3, 3, 3, 1), 3) is None
    # [2,1,1,1] first-column hooks are 5, 3, 2, 1, so no length-4 strip.
    assert boundary_strip((2, 1, 1, 1), 4) is None
    for h in (1, 2, 3, 5):
        assert boundary_strip((2, 1, 1, 1), h) is not None


def test_boundary_strip_inner_is_partition():
    for lam in partitions_of(7):
        for h in range(1, 8):
            strip = boundary_strip(lam, h)
            if strip is None:
                continue
            assert len(strip.boxes) == h
            assert make_partition(strip.inner) == strip.inner
            assert sum(strip.inner) == sum(lam) - h
            # the strip always contains the foot of column 1
            assert (len(lam), 1) in strip.boxes
