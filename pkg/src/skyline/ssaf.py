"""Semi-skyline augmented fillings.

A filling is stored column by column, each column bottom to top, over a
basement row (row 0).  The ordinary basement is ``1..n``; the same class with
a permuted basement is used by :mod:`skyline.demazure`.

Cells are ``(row, col)`` with ``row >= 0`` (0 is the basement) and 1-based
columns.  Reading order is top row first, left to right within a row.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .core import Composition, identity, simple_reflection, apply_perm
from .polynomial import Polynomial
from .tableaux import SSYT, col_word

__all__ = [
    "SSAF", "PermutedSSAF", "Triple", "PlacementFailed",
    "is_attacking", "inversion_indicator", "triples", "check_triple",
    "triple_orientation_ok", "validate", "violations", "is_non_attacking",
    "reading_word", "enumerate_fillings", "enumerate_ssaf", "e_poly",
    "rho", "rows_of", "psi", "super_filling", "theta_cap", "shape_of",
    "weight_of",
]


class PlacementFailed(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class SSAF:
    columns: tuple[tuple[int, ...], ...]
    basement: tuple[int, ...] = ()

    def __post_init__(self):
        cols = tuple(tuple(int(a) for a in c) for c in self.columns)
        object.__setattr__(self, "columns", cols)
        base = tuple(self.basement) or identity(len(cols))
        if len(base) != len(cols):
            raise ValueError(f"basement {base} does not match {len(cols)} columns")
        object.__setattr__(self, "basement", base)

    # a permuted-basement filling over 1..n equals the ordinary one
    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SSAF):
            return NotImplemented
        return self.columns == other.columns and self.basement == other.basement

    def __hash__(self) -> int:
        return hash((self.columns, self.basement))

    @property
    def n(self) -> int:
        return len(self.columns)

    @property
    def shape(self) -> Composition:
        return tuple(len(c) for c in self.columns)

    @property
    def height(self) -> int:
        return max(self.shape, default=0)

    def entry(self, row: int, col: int) -> int | None:
        if row == 0:
            return self.basement[col - 1]
        c = self.columns[col - 1]
        return c[row - 1] if row <= len(c) else None

    def cells(self, include_basement: bool = True) -> Iterator[tuple[int, int]]:
        """Cells in reading order."""
        for row in range(self.height, -1 if include_basement else 0, -1):
            for col in range(1, self.n + 1):
                if row == 0 or row <= len(self.columns[col - 1]):
                    yield row, col

    def to_json(self) -> dict:
        return {"shape": list(self.shape), "columns": [list(c) for c in self.columns]}

    @classmethod
    def from_json(cls, data: dict) -> SSAF:
        base = tuple(data.get("basement", ()))
        filling = cls(tuple(tuple(c) for c in data["columns"]), base)
        if "shape" in data and tuple(data["shape"]) != filling.shape:
            raise ValueError(f"declared shape {data['shape']} does not match the columns")
        return filling

    def to_text(self) -> str:
        """Augmented diagram, top row first; basement entries are bracketed."""
        width = max(len(str(a)) for a in self.basement) + 2 if self.n else 1
        lines = []
        for row in range(self.height, 0, -1):
            cells = [self.entry(row, col) for col in range(1, self.n + 1)]
            lines.append(" ".join(("" if a is None else str(a)).center(width) for a in cells).rstrip())
        lines.append(" ".join(f"[{a}]".center(width) for a in self.basement))
        return "\n".join(lines)


class PermutedSSAF(SSAF):
    """Filling over the basement ``w(1..n)`` (partition shapes in practice)."""

    def to_json(self) -> dict:
        data = super().to_json()
        data["basement"] = list(self.basement)
        return data


def shape_of(f: SSAF) -> Composition:
    return f.shape


def weight_of(f: SSAF) -> tuple[int, ...]:
    """Content exponent vector (basement excluded)."""
    out = [0] * f.n
    for col in f.columns:
        for a in col:
            out[a - 1] += 1
    return tuple(out)


def reading_word(f: SSAF, include_basement: bool = False) -> tuple[int, ...]:
    return tuple(f.entry(r, c) for r, c in f.cells(include_basement))


def is_attacking(a: tuple[int, int], b: tuple[int, int]) -> bool:
    """Same row, or adjacent rows with the higher cell strictly to the right."""
    (i1, j1), (i2, j2) = a, b
    if a == b:
        return False
    if i1 == i2:
        return True
    if i1 - i2 == 1 and j2 < j1:
        return True
    return i2 - i1 == 1 and j1 < j2


def inversion_indicator(x: int, y: int) -> int:
    return 1 if x > y else 0


@dataclass(frozen=True)
class Triple:
    kind: str  # "A" or "B"
    cells: tuple[tuple[int, int], tuple[int, int], tuple[int, int]]  # a1, a2, a3


def triples(shape: Sequence[int]) -> Iterator[Triple]:
    """Every type A and type B triple of the augmented diagram of ``shape``.

    Type A: ``a1=(r, j1)``, ``a2=(r, j2)``, ``a3=(r-1, j1)`` with ``j1 < j2``
    and column ``j1`` at least as tall as ``j2``.  Type B: ``a1=(r, j1)``,
    ``a2=(r, j2)``, ``a3=(r+1, j2)`` with ``j1 < j2`` and column ``j2``
    strictly taller.  All three cells must exist; row 0 is the basement.
    """
    n = len(shape)
    for j1 in range(1, n + 1):
        for j2 in range(j1 + 1, n + 1):
            h1, h2 = shape[j1 - 1], shape[j2 - 1]
            if h1 >= h2:
                for r in range(1, h2 + 1):
                    yield Triple("A", ((r, j1), (r, j2), (r - 1, j1)))
            else:
                for r in range(0, h1 + 1):
                    yield Triple("B", ((r, j1), (r, j2), (r + 1, j2)))


def check_triple(kind: str, x1: int, x2: int, x3: int) -> bool:
    """Inversion-triple test on the entries of ``a1, a2, a3``."""
    I = inversion_indicator
    if kind == "A":
        return I(x1, x2) + I(x2, x3) - I(x1, x3) == 1
    return I(x3, x1) + I(x1, x2) - I(x3, x2) == 1


def triple_orientation_ok(kind: str, cells: Sequence[tuple[int, int]],
                          entries: Sequence[int]) -> bool:
    """Inversion-triple test via the orientation of the cells.

    Cells are ranked by entry, ties broken by reading order.  Type A triples
    need the cells, smallest to largest, to run counter-clockwise; type B
    triples clockwise.
    """
    def reading_key(cell):
        return (-cell[0], cell[1])

    order = sorted(range(3), key=lambda k: (entries[k], reading_key(cells[k])))
    # cyclic order (a1, a2, a3) is clockwise in the drawing for type A
    # (a1 top-left, a2 right, a3 below a1) and counter-clockwise for type B
    # (a1 left, a2 right, a3 above a2)
    forward = order in ([0, 1, 2], [1, 2, 0], [2, 0, 1])
    return not forward


def violations(f: SSAF) -> list[Triple]:
    """Triples of ``f`` that are not inversion triples."""
    bad = []
    for t in triples(f.shape):
        x1, x2, x3 = (f.entry(*c) for c in t.cells)
        if not check_triple(t.kind, x1, x2, x3):
            bad.append(t)
    return bad


def validate(f: SSAF) -> bool:
    """Columns weakly decrease going up (basement included) and every triple inverts."""
    for col in range(1, f.n + 1):
        below = f.basement[col - 1]
        for a in f.columns[col - 1]:
            if a < 1 or a > below:
                return False
            below = a
    return not violations(f)


def is_non_attacking(f: SSAF) -> bool:
    cells = list(f.cells())
    for k, a in enumerate(cells):
        for b in cells[k + 1:]:
            if is_attacking(a, b) and f.entry(*a) == f.entry(*b):
                return False
    return True


def enumerate_fillings(shape: Sequence[int], basement: Sequence[int]) -> list[SSAF]:
    """Backtracking search for every valid filling of ``shape`` over ``basement``.

    Cells are filled bottom row first, left to right.  Each triple is checked
    as soon as its last cell receives a value: type A when ``a2`` is placed,
    type B when ``a3`` is placed.
    """
    shape = tuple(shape)
    basement = tuple(basement)
    n = len(shape)
    cls = SSAF if basement == identity(n) else PermutedSSAF
    grid = [[basement[j]] + [0] * shape[j] for j in range(n)]  # grid[j][row]
    plan = []
    for r in range(1, max(shape, default=0) + 1):
        for j in range(n):
            if shape[j] >= r:
                # type A partners: a1 = (r, j1) with j1 < j and shape[j1] >= shape[j]
                a_partners = [j1 for j1 in range(j) if shape[j1] >= shape[j]]
                # type B partners: a1 = (r-1, j1) with j1 < j and shape[j1] < shape[j]
                b_partners = [j1 for j1 in range(j) if r - 1 <= shape[j1] < shape[j]]
                plan.append((r, j, a_partners, b_partners))
    out: list[SSAF] = []

    def fill(k: int) -> None:
        if k == len(plan):
            out.append(cls(tuple(tuple(col[1:]) for col in grid), basement))
            return
        r, j, a_partners, b_partners = plan[k]
        col = grid[j]
        for v in range(1, col[r - 1] + 1):
            ok = True
            for j1 in a_partners:
                x1, x3 = grid[j1][r], grid[j1][r - 1]
                if (x1 > v) + (v > x3) - (x1 > x3) != 1:
                    ok = False
                    break
            if ok:
                x2 = col[r - 1]
                for j1 in b_partners:
                    x1 = grid[j1][r - 1]
                    if (v > x1) + (x1 > x2) - (v > x2) != 1:
                        ok = False
                        break
            if ok:
                col[r] = v
                fill(k + 1)
        col[r] = 0

    fill(0)
    return out


def enumerate_ssaf(shape: Sequence[int]) -> list[SSAF]:
    return enumerate_fillings(shape, identity(len(shape)))


def e_poly(shape: Sequence[int]) -> Polynomial:
    """Generating function of the fillings of ``shape``."""
    terms: dict[tuple[int, ...], int] = {}
    for f in enumerate_ssaf(shape):
        w = weight_of(f)
        terms[w] = terms.get(w, 0) + 1
    return Polynomial(terms, n=len(shape))


def super_filling(shape: Sequence[int]) -> SSAF:
    """Column ``j`` filled with ``j`` only."""
    return SSAF(tuple((j,) * h for j, h in enumerate(shape, start=1)))


def rows_of(f: SSAF) -> list[tuple[int, ...]]:
    """Entries of each row (rows 1, 2, ...), each sorted increasingly."""
    return [tuple(sorted(f.entry(r, c) for c in range(1, f.n + 1) if f.entry(r, c) is not None))
            for r in range(1, f.height + 1)]


def rho(rows: Iterable[Iterable[int]], basement: Sequence[int] | int) -> SSAF:
    """Rebuild a filling from its row contents.

    Rows are placed from the bottom up; within a row the largest entry goes
    first, on top of the leftmost column whose current top (in the row below)
    is at least as large.  ``basement`` is a permutation, or ``n`` for the
    ordinary basement.
    """
    if isinstance(basement, int):
        basement = identity(basement)
    basement = tuple(basement)
    n = len(basement)
    columns: list[list[int]] = [[] for _ in range(n)]
    for r, row in enumerate(rows, start=1):
        for a in sorted(row, reverse=True):
            for j in range(n):
                col = columns[j]
                if len(col) == r - 1 and (col[-1] if col else basement[j]) >= a:
                    col.append(a)
                    break
            else:
                raise PlacementFailed(f"no column accepts {a} in row {r}")
    cls = SSAF if basement == identity(n) else PermutedSSAF
    return cls(tuple(tuple(c) for c in columns), basement)


def psi(t: SSYT, n: int | None = None) -> SSAF:
    """Insert the tableau into an empty filling with ``n`` columns.

    Columns of ``t`` are inserted rightmost first, each from its smallest
    entry to its largest.
    """
    n = max(t.max_entry, len(t.shape)) if n is None else n
    if t.max_entry > n:
        raise ValueError(f"tableau entry {t.max_entry} exceeds n = {n}")
    columns: list[list[int]] = [[] for _ in range(n)]
    for a in reversed(col_word(t)):
        _insert(columns, a)
    return SSAF(tuple(tuple(c) for c in columns))


def _insert(columns: list[list[int]], a: int) -> None:
    n = len(columns)
    height = max((len(c) for c in columns), default=0)
    # scan entries beta in reading order (basement included); look at the cell above beta
    for row in range(height, -1, -1):
        for j in range(n):
            col = columns[j]
            if row > len(col):
                continue
            beta = col[row - 1] if row else j + 1
            if beta < a:
                continue
            if row == len(col):
                col.append(a)
                return
            above = col[row]
            if above < a:
                col[row], a = a, above
    raise PlacementFailed(f"insertion of {a} fell off the basement")


def theta_cap(f: SSAF, i: int) -> SSAF:
    """Lowering operator on fillings.

    Same-row pairs ``{i, i+1}`` cancel first; the remaining letters are matched
    as parentheses along the reading word (``i+1`` opens, ``i`` closes) and the
    rightmost unmatched ``i`` becomes ``i+1``.  The filling is rebuilt from its
    new row contents.
    """
    if not 1 <= i < f.n:
        raise ValueError(f"index {i} out of range for {f.n} columns")
    rows = [list(r) for r in rows_of(f)]
    open_count = 0
    target = None
    for r in range(len(rows) - 1, -1, -1):  # reading order: top row first
        has_i, has_next = i in rows[r], i + 1 in rows[r]
        if has_i and has_next:
            continue
        if has_next:
            open_count += 1
        elif has_i:
            if open_count:
                open_count -= 1
            else:
                target = r
    if target is None:
        return f
    row = rows[target]
    row[row.index(i)] = i + 1
    return rho(rows, f.basement)


def lowering_shapes(f: SSAF, i: int) -> tuple[Composition, Composition]:
    """The two shapes a lowering at ``i`` may produce: ``shape`` and ``s_i shape``."""
    return f.shape, apply_perm(simple_reflection(i, f.n), f.shape)
