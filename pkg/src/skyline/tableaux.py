"""Semi-standard Young tableaux in French convention (bottom row first).

Besides enumeration and the crystal lowering operator, this module holds the
slow, definition-level right key: close the column word under Knuth moves and
read the key off column-frank words.  It exists as an oracle for the
insertion-based right key in :mod:`skyline.demazure`.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterator, Sequence

from .core import Composition, Partition, Word, conjugate, sort_desc, strip_zeros
from .polynomial import Polynomial

__all__ = [
    "SSYT", "ClosureTooLarge", "NoColumnFrankWord", "CrystalGraph",
    "validate", "enumerate_ssyt", "col_word", "colform", "is_column_frank",
    "knuth_class", "right_key_oracle", "key_of_composition", "is_key",
    "content", "crystal_f", "crystal_graph", "schur", "yamanouchi",
    "from_columns", "theta_lift",
]


class ClosureTooLarge(RuntimeError):
    pass


class NoColumnFrankWord(RuntimeError):
    pass


@dataclass(frozen=True, order=True)
class SSYT:
    """Rows listed bottom to top; entries are positive ints."""

    rows: tuple[tuple[int, ...], ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "rows", tuple(tuple(int(a) for a in r) for r in self.rows if len(r)))

    @property
    def shape(self) -> Partition:
        return tuple(len(r) for r in self.rows)

    @property
    def size(self) -> int:
        return sum(self.shape)

    @property
    def max_entry(self) -> int:
        return max((max(r) for r in self.rows), default=0)

    def columns(self) -> list[tuple[int, ...]]:
        """Columns left to right, each read bottom to top."""
        width = len(self.rows[0]) if self.rows else 0
        return [tuple(r[k] for r in self.rows if len(r) > k) for k in range(width)]

    def to_json(self) -> dict:
        return {"rows": [list(r) for r in self.rows]}

    @classmethod
    def from_json(cls, data: dict) -> SSYT:
        return cls(tuple(tuple(r) for r in data["rows"]))

    def to_text(self) -> str:
        """One row per line, top row first so the picture reads as drawn."""
        return "\n".join(" ".join(str(a) for a in r) for r in reversed(self.rows))

    def label(self) -> str:
        """Compact bottom-up serialization, e.g. ``1,1/2``."""
        return "/".join(",".join(str(a) for a in r) for r in self.rows)


def from_columns(columns: Sequence[Sequence[int]]) -> SSYT:
    """Build a tableau from columns given bottom to top."""
    height = max((len(c) for c in columns), default=0)
    return SSYT(tuple(tuple(c[r] for c in columns if len(c) > r) for r in range(height)))


def validate(t: SSYT) -> bool:
    rows = t.rows
    if any(a <= 0 for r in rows for a in r):
        return False
    if any(len(rows[k]) < len(rows[k + 1]) for k in range(len(rows) - 1)):
        return False
    for r in rows:
        if any(a > b for a, b in zip(r, r[1:])):
            return False
    for below, above in zip(rows, rows[1:]):
        if any(a <= b for a, b in zip(above, below)):
            return False
    return True


def enumerate_ssyt(shape: Sequence[int], max_entry: int) -> list[SSYT]:
    """All tableaux of ``shape`` with entries in ``1..max_entry``.

    Cells are filled bottom row first, left to right, smallest value first,
    so the output is in a fixed order.
    """
    shape = strip_zeros(shape)
    cells = [(r, c) for r, length in enumerate(shape) for c in range(length)]
    grid = [[0] * length for length in shape]
    out: list[SSYT] = []

    def fill(k: int) -> None:
        if k == len(cells):
            out.append(SSYT(tuple(tuple(row) for row in grid)))
            return
        r, c = cells[k]
        lo = 1
        if c:
            lo = grid[r][c - 1]
        if r:
            lo = max(lo, grid[r - 1][c] + 1)
        # leave room for the strictly increasing cells stacked above
        hi = max_entry - (sum(1 for rr in range(r + 1, len(shape)) if shape[rr] > c))
        for v in range(lo, hi + 1):
            grid[r][c] = v
            fill(k + 1)
        grid[r][c] = 0

    fill(0)
    return out


def yamanouchi(shape: Sequence[int]) -> SSYT:
    return SSYT(tuple((r + 1,) * length for r, length in enumerate(strip_zeros(shape))))


def col_word(t: SSYT) -> Word:
    """Columns left to right, each read top to bottom."""
    return tuple(a for col in t.columns() for a in reversed(col))


def _col_word_cells(t: SSYT) -> list[tuple[int, int]]:
    # (row, column) of each letter of col_word(t), same order
    cells = []
    for c, col in enumerate(t.columns()):
        cells.extend((r, c) for r in reversed(range(len(col))))
    return cells


def colform(w: Sequence[int]) -> tuple[int, ...]:
    """Lengths of the maximal strictly decreasing runs of ``w``."""
    runs: list[int] = []
    for k, a in enumerate(w):
        if k and w[k - 1] > a:
            runs[-1] += 1
        else:
            runs.append(1)
    return tuple(runs)


def _last_run(w: Sequence[int]) -> tuple[int, ...]:
    k = len(w) - 1
    while k > 0 and w[k - 1] > w[k]:
        k -= 1
    return tuple(w[k:])


def is_column_frank(w: Sequence[int], shape: Sequence[int]) -> bool:
    target = sorted(strip_zeros(conjugate(strip_zeros(shape))))
    return sorted(colform(w)) == target


def _knuth_neighbours(w: Word) -> Iterator[Word]:
    for k in range(len(w) - 2):
        a, b, c = w[k], w[k + 1], w[k + 2]
        head, tail = w[:k], w[k + 3:]
        # x z y <-> z x y   (x <= y < z)
        if a <= c < b:
            yield head + (b, a, c) + tail
        if b <= c < a:
            yield head + (b, a, c) + tail
        # y x z <-> y z x   (x < y <= z)
        if b < a <= c:
            yield head + (a, c, b) + tail
        if c < a <= b:
            yield head + (a, c, b) + tail


def knuth_class(w: Sequence[int], cap: int = 100_000) -> set[Word]:
    """Closure of ``{w}`` under elementary Knuth transformations."""
    start = tuple(w)
    seen = {start}
    queue = deque([start])
    while queue:
        for v in _knuth_neighbours(queue.popleft()):
            if v not in seen:
                seen.add(v)
                if len(seen) > cap:
                    raise ClosureTooLarge(f"Knuth class of {start} exceeds {cap} words")
                queue.append(v)
    return seen


def right_key_oracle(t: SSYT, cap: int = 100_000) -> SSYT:
    """Right key from column-frank words in the Knuth class of ``col_word(t)``."""
    shape = t.shape
    heights = strip_zeros(conjugate(shape))
    frank = sorted(v for v in knuth_class(col_word(t), cap) if is_column_frank(v, shape))
    columns = []
    for h in heights:
        for v in frank:
            if colform(v)[-1] == h:
                columns.append(tuple(sorted(_last_run(v))))
                break
        else:
            raise NoColumnFrankWord(f"no column-frank word ending in a column of height {h}")
    return from_columns(columns)


def content(t: SSYT, n: int | None = None) -> Composition:
    n = t.max_entry if n is None else n
    out = [0] * n
    for r in t.rows:
        for a in r:
            if a > n:
                raise ValueError(f"entry {a} exceeds n = {n}")
            out[a - 1] += 1
    return tuple(out)


def key_of_composition(c: Sequence[int]) -> SSYT:
    """The key whose first ``c_j`` columns contain ``j``."""
    width = max(c, default=0)
    return from_columns([tuple(j for j, cj in enumerate(c, start=1) if cj >= i)
                         for i in range(1, width + 1)])


def is_key(t: SSYT) -> bool:
    if not validate(t):
        return False
    cols = [set(c) for c in t.columns()]
    return all(b <= a for a, b in zip(cols, cols[1:]))


def crystal_f(t: SSYT, i: int) -> SSYT:
    """Lowering operator: flip the rightmost unmatched ``i`` of the column word."""
    if i < 1:
        raise ValueError(f"crystal index {i} must be positive")
    word = col_word(t)
    cells = _col_word_cells(t)
    open_count = 0
    unmatched = None
    for k, a in enumerate(word):
        if a == i + 1:
            open_count += 1
        elif a == i:
            if open_count:
                open_count -= 1
            else:
                unmatched = k
    if unmatched is None:
        return t
    r, c = cells[unmatched]
    rows = [list(row) for row in t.rows]
    rows[r][c] = i + 1
    return SSYT(tuple(tuple(row) for row in rows))


def _crystal_e(t: SSYT, i: int) -> SSYT:
    # raising operator: flip the leftmost unmatched i+1 of the column word
    word = col_word(t)
    cells = _col_word_cells(t)
    close_count = 0
    unmatched = None
    for k in range(len(word) - 1, -1, -1):
        a = word[k]
        if a == i:
            close_count += 1
        elif a == i + 1:
            if close_count:
                close_count -= 1
            else:
                unmatched = k
    if unmatched is None:
        return t
    r, c = cells[unmatched]
    rows = [list(row) for row in t.rows]
    rows[r][c] = i
    return SSYT(tuple(tuple(row) for row in rows))


def theta_lift(t: SSYT, i: int, n: int | None = None) -> list[tuple[SSYT, int]]:
    """Exchange operator on tableaux (words up to plactic equivalence).

    With ``k = m_i - m_{i+1}`` read off the content: for ``k >= 0`` returns
    ``f_i(t), f_i^2(t), ..., f_i^k(t)`` with sign ``+1``; for ``k < 0``
    returns ``t, e_i(t), ..., e_i^{|k|-1}(t)`` with sign ``-1``.
    """
    c = content(t, max(n or 0, t.max_entry, i + 1))
    k = c[i - 1] - c[i]
    out = []
    if k >= 0:
        for _ in range(k):
            t = crystal_f(t, i)
            out.append((t, 1))
    else:
        for _ in range(-k):
            out.append((t, -1))
            t = _crystal_e(t, i)
    return out


@dataclass
class CrystalGraph:
    nodes: list[SSYT]
    edges: list[tuple[int, int, int]] = field(default_factory=list)  # (src, dst, i)
    n: int = 0


def crystal_graph(shape: Sequence[int], n: int) -> CrystalGraph:
    nodes = enumerate_ssyt(shape, n)
    index = {t: k for k, t in enumerate(nodes)}
    graph = CrystalGraph(nodes, n=n)
    for k, t in enumerate(nodes):
        for i in range(1, n):
            s = crystal_f(t, i)
            if s != t:
                graph.edges.append((k, index[s], i))
    return graph


def schur(shape: Sequence[int], n: int) -> Polynomial:
    """Schur polynomial as a sum of tableau weights."""
    terms: dict[tuple[int, ...], int] = {}
    for t in enumerate_ssyt(shape, n):
        e = content(t, n)
        terms[e] = terms.get(e, 0) + 1
    return Polynomial(terms, n=n)


def dominant_shape(c: Sequence[int]) -> Partition:
    return strip_zeros(sort_desc(c))
