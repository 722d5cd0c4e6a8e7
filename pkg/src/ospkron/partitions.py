"""Young-diagram combinatorics: partitions, conjugation, hooks, boundary strips.

Partitions are plain tuples of weakly decreasing positive integers; the empty
tuple is the empty diagram, printed as ``[0]``. All functions are pure.
"""

from dataclasses import dataclass
from functools import cache
import re

Partition = tuple[int, ...]


def is_partition(rows) -> bool:
    """True if ``rows`` is weakly decreasing with positive entries."""
    rows = tuple(rows)
    if any(not isinstance(r, int) or r < 1 for r in rows):
        return False
    return all(rows[i] >= rows[i + 1] for i in range(len(rows) - 1))


def make_partition(rows) -> Partition:
    """Normalize an iterable of row lengths (drops trailing zeros)."""
    rows = tuple(int(r) for r in rows)
    while rows and rows[-1] == 0:
        rows = rows[:-1]
    if not is_partition(rows):
        raise ValueError(f"not a partition: {rows}")
    return rows


_EXPONENT = re.compile(r"^(\d+)\^(\d+)$")


def parse_partition(text: str) -> Partition:
    """Parse ``[3,3,3,1]``, ``[0]``, ``[]`` or exponent shorthand ``3^3,1``."""
    s = text.strip()
    if s.startswith("[") and s.endswith("]"):
        s = s[1:-1]
    s = s.strip()
    if s in ("", "0"):
        return ()
    rows: list[int] = []
    for piece in s.split(","):
        piece = piece.strip()
        m = _EXPONENT.match(piece)
        if m:
            rows.extend([int(m.group(1))] * int(m.group(2)))
        else:
            rows.append(int(piece))
    return make_partition(rows)


def format_partition(p: Partition) -> str:
    if not p:
        return "[0]"
    return "[" + ",".join(str(r) for r in p) + "]"


def conjugate(p: Partition) -> Partition:
    """Transpose the diagram: result rows are the column lengths of ``p``."""
    if not p:
        return ()
    cols = [0] * p[0]
    for r in p:
        for j in range(r):
            cols[j] += 1
    return tuple(cols)


def contains(outer: Partition, inner: Partition) -> bool:
    """Cell-wise containment: inner_i <= outer_i for all rows."""
    if len(inner) > len(outer):
        return False
    return all(inner[i] <= outer[i] for i in range(len(inner)))


def hook_lengths(p: Partition) -> list[list[int]]:
    """Hook length of each cell: arm + leg + 1."""
    conj = conjugate(p)
    return [
        [p[i] - (j + 1) + conj[j] - (i + 1) + 1 for j in range(p[i])]
        for i in range(len(p))
    ]


@cache
def partitions_of(n: int, max_part: int | None = None) -> tuple[Partition, ...]:
    """All partitions of ``n`` with parts bounded by ``max_part``."""
    if n == 0:
        return ((),)
    if max_part is None or max_part > n:
        max_part = n
    out = []
    for first in range(max_part, 0, -1):
        for rest in partitions_of(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def remove_one_box(p: Partition) -> list[Partition]:
    """Partitions obtained by removing a single corner box."""
    out = []
    for i in range(len(p)):
        if i == len(p) - 1 or p[i] > p[i + 1]:
            out.append(make_partition(p[:i] + (p[i] - 1,) + p[i + 1:]))
    return out

def add_one_box(p: Partition) -> list[Partition]:
    """Partitions obtained by adding a single box at an addable corner."""
    out = []
    for i in range(len(p) + 1):
        new = p[i] + 1 if i < len(p) else 1
        if i == 0 or p[i - 1] >= new:
            out.append(p[:i] + (new,) + p[i + 1:])
    return out


@dataclass(frozen=True)
class SkewStrip:
    """A boundary strip: the cells of ``outer`` not in ``inner``.

    Coordinates are 1-based (row, column). The strip runs along the
    south-east boundary of ``outer`` starting at the foot of the first
    column; it never contains a 2x2 block.
    """

    outer: Partition
    inner: Partition
    boxes: tuple[tuple[int, int], ...]

    @property
    def columns_spanned(self) -> int:
        cols = [c for _, c in self.boxes]
        return max(cols) - min(cols) + 1

    @property
    def rows_spanned(self) -> int:
        rows = [r for r, _ in self.boxes]
        return max(rows) - min(rows) + 1


def boundary_strip(p: Partition, h: int) -> SkewStrip | None:
    """Strip of ``h`` boxes walked along the south-east boundary of ``p``.

    The walk starts at the foot of the first column and follows the
    boundary cells edge to edge; it succeeds only when removing the strip
    leaves a valid partition. Removable strip lengths are exactly the
    hook lengths of the first-column cells, and the strip for the hook of
    cell (i, 1) runs from the foot of column 1 up to cell (i, p_i).

    Returns None when no such strip exists (the caller's "set to zero"
    branch).
    """
    if h < 1:
        raise ValueError("strip length must be >= 1")
    q = len(p)
    for i in range(1, q + 1):
        if p[i - 1] + q - i != h:
            continue
        # Remainder: rows above i unchanged, rows below shift up minus one.
        inner = make_partition(p[: i - 1] + tuple(p[r] - 1 for r in range(i, q)))
        boxes = []
        for r in range(q, i - 1, -1):
            lo = 1 if r == q else p[r]  # p[r] is the old length of row r+1
            boxes.extend((r, c) for c in range(lo, p[r - 1] + 1))
        return SkewStrip(outer=p, inner=inner, boxes=tuple(boxes))
    return None
