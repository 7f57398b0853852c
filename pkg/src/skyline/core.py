"""Partitions, weak compositions and permutations.

Everything here is a plain tuple of ints.  Permutations are in one-line
notation on ``1..n``; compositions and partitions are zero padded so that
their length is the number of variables ``n``.

>>> perm_of_composition((1, 0, 3, 3, 0, 1, 2, 0))
(3, 4, 7, 1, 6, 2, 5, 8)
>>> apply_perm((3, 1, 2), (2, 1, 0))
(1, 0, 2)
"""

from __future__ import annotations

from itertools import permutations as _permutations
from typing import Iterable, Iterator, Sequence

__all__ = [
    "Partition", "Composition", "Permutation", "Word",
    "as_partition", "as_composition", "as_permutation",
    "conjugate", "sort_desc", "perm_of_composition", "apply_perm",
    "bruhat_leq", "reduced_word", "length", "inversions",
    "compose", "inverse", "identity", "longest", "simple_reflection",
    "word_product", "all_permutations", "partitions", "rearrangements",
    "strip_zeros",
]

Partition = tuple[int, ...]
Composition = tuple[int, ...]
Permutation = tuple[int, ...]
Word = tuple[int, ...]


def as_partition(parts: Iterable[int], n: int | None = None) -> Partition:
    """Validate ``parts`` as a partition and pad it with zeros to length ``n``."""
    parts = tuple(int(p) for p in parts)
    if any(p < 0 for p in parts):
        raise ValueError(f"partition {parts} has a negative part")
    if any(a < b for a, b in zip(parts, parts[1:])):
        raise ValueError(f"partition {parts} is not weakly decreasing")
    return _pad(parts, n)


def as_composition(parts: Iterable[int], n: int | None = None) -> Composition:
    parts = tuple(int(p) for p in parts)
    if any(p < 0 for p in parts):
        raise ValueError(f"composition {parts} has a negative part")
    return _pad(parts, n)


def _pad(parts: tuple[int, ...], n: int | None) -> tuple[int, ...]:
    if n is None:
        return parts
    if any(parts[n:]):
        raise ValueError(f"{parts} has more than {n} nonzero parts")
    return parts[:n] + (0,) * (n - len(parts))


def as_permutation(letters: Iterable[int]) -> Permutation:
    w = tuple(int(a) for a in letters)
    if sorted(w) != list(range(1, len(w) + 1)):
        raise ValueError(f"{w} is not a permutation of 1..{len(w)}")
    return w


def strip_zeros(parts: Sequence[int]) -> tuple[int, ...]:
    """Drop trailing zeros."""
    end = len(parts)
    while end and parts[end - 1] == 0:
        end -= 1
    return tuple(parts[:end])


def conjugate(p: Sequence[int], n: int | None = None) -> Partition:
    """Conjugate partition, padded to ``n`` (default: ``len(p)``, widened if needed).

    >>> conjugate((4, 2, 2, 1))
    (4, 3, 1, 1)
    """
    width = len(p) if n is None else n
    top = p[0] if p else 0
    out = [sum(1 for part in p if part >= i) for i in range(1, top + 1)]
    return tuple(out) + (0,) * max(0, width - len(out))


def sort_desc(c: Sequence[int]) -> Partition:
    return tuple(sorted(c, reverse=True))


def perm_of_composition(c: Sequence[int]) -> Permutation:
    """Columns listed from tallest to shortest, ties broken left to right.

    This is the shortest permutation sending ``sort_desc(c)`` to ``c``.
    """
    return tuple(sorted(range(1, len(c) + 1), key=lambda j: (-c[j - 1], j)))


def apply_perm(w: Sequence[int], p: Sequence[int]) -> Composition:
    """Place part ``p[i]`` in position ``w(i)``."""
    if len(w) != len(p):
        raise ValueError(f"permutation {tuple(w)} and parts {tuple(p)} differ in length")
    out = [0] * len(p)
    for i, part in enumerate(p):
        out[w[i] - 1] = part
    return tuple(out)


def bruhat_leq(u: Sequence[int], v: Sequence[int]) -> bool:
    """Strong Bruhat order via decreasing-sorted prefix comparison."""
    if len(u) != len(v):
        raise ValueError("permutations of different sizes")
    for k in range(1, len(u) + 1):
        a = sorted(u[:k], reverse=True)
        b = sorted(v[:k], reverse=True)
        if any(x > y for x, y in zip(a, b)):
            return False
    return True


def inversions(w: Sequence[int]) -> int:
    n = len(w)
    return sum(1 for i in range(n) for j in range(i + 1, n) if w[i] > w[j])


length = inversions


def identity(n: int) -> Permutation:
    return tuple(range(1, n + 1))


def longest(n: int) -> Permutation:
    return tuple(range(n, 0, -1))


def simple_reflection(i: int, n: int) -> Permutation:
    if not 1 <= i < n:
        raise ValueError(f"s_{i} is not a simple reflection of S_{n}")
    w = list(range(1, n + 1))
    w[i - 1], w[i] = w[i], w[i - 1]
    return tuple(w)


def compose(u: Sequence[int], v: Sequence[int]) -> Permutation:
    """The function ``u o v`` (apply ``v`` first)."""
    return tuple(u[v[i] - 1] for i in range(len(v)))


def inverse(w: Sequence[int]) -> Permutation:
    out = [0] * len(w)
    for i, a in enumerate(w, start=1):
        out[a - 1] = i
    return tuple(out)


def word_product(word: Sequence[int], n: int) -> Permutation:
    """``s_{i1} o s_{i2} o ... o s_{ik}`` in one-line notation."""
    w = list(range(1, n + 1))
    # right multiplication by s_i swaps positions i, i+1
    for i in word:
        if not 1 <= i < n:
            raise ValueError(f"letter {i} out of range for S_{n}")
        w[i - 1], w[i] = w[i], w[i - 1]
    return tuple(w)


def reduced_word(w: Sequence[int]) -> Word:
    """Deterministic reduced word ``(i1, ..., ik)`` with ``w = s_i1 ... s_ik``.

    The largest value not yet in place is bubbled to the right one position at
    a time; the adjacent swaps, read in reverse, spell ``w``.

    >>> reduced_word((3, 1, 2))
    (2, 1)
    """
    cur = list(w)
    swaps: list[int] = []
    for value in range(len(cur), 0, -1):
        pos = cur.index(value)
        while pos < value - 1:
            cur[pos], cur[pos + 1] = cur[pos + 1], cur[pos]
            swaps.append(pos + 1)
            pos += 1
    return tuple(reversed(swaps))


def all_permutations(n: int) -> Iterator[Permutation]:
    """All of S_n in lexicographic order."""
    return _permutations(range(1, n + 1))


def partitions(size: int, max_parts: int | None = None,
               max_part: int | None = None) -> Iterator[Partition]:
    """Partitions of ``size`` (nonzero parts only), in reverse lex order."""
    if max_part is None:
        max_part = size
    if size == 0:
        yield ()
        return
    if max_parts == 0:
        return
    for first in range(min(size, max_part), 0, -1):
        rest_parts = None if max_parts is None else max_parts - 1
        for rest in partitions(size - first, rest_parts, first):
            yield (first,) + rest


def rearrangements(parts: Sequence[int]) -> list[Composition]:
    """Distinct rearrangements of ``parts``, in decreasing lex order."""
    counts: dict[int, int] = {}
    for p in parts:
        counts[p] = counts.get(p, 0) + 1
    values = sorted(counts, reverse=True)
    out: list[Composition] = []
    prefix: list[int] = []

    def extend(remaining: int) -> None:
        if not remaining:
            out.append(tuple(prefix))
            return
        for v in values:
            if counts[v]:
                counts[v] -= 1
                prefix.append(v)
                extend(remaining - 1)
                prefix.pop()
                counts[v] += 1

    extend(len(parts))
    return out
