"""Demazure atoms, key polynomials, right keys and permuted basements.

Atoms and key polynomials each have several independent constructions here
(operators on the dominant monomial, enumeration of fillings, sums over a
Bruhat interval, permuted-basement fillings).  They are meant to be compared
against one another; see :mod:`skyline.verify`.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Callable, Sequence

from .core import (
    Permutation, apply_perm, as_partition, as_permutation, bruhat_leq,
    perm_of_composition, rearrangements, reduced_word, sort_desc,
)
from .polynomial import Polynomial, apply_word, monomial_of
from .ssaf import (
    SSAF, PermutedSSAF, e_poly, enumerate_fillings, psi, rho, rows_of,
    validate as validate_filling, weight_of,
)
from .tableaux import SSYT, content, from_columns, key_of_composition, theta_lift, yamanouchi

__all__ = [
    "minimal_representative", "atom_via_ssaf", "atom_tableaux", "atom_via_operators",
    "atom_via_theta", "right_key", "key_tableau_of_perm", "key_tableau",
    "key_poly_via_operators", "key_poly_via_atoms", "enumerate_pb",
    "key_poly_via_pb", "pb_from_ssaf", "ssaf_from_pb", "validate_pb",
]


def _prepare(w: Sequence[int], lam: Sequence[int]) -> tuple[Permutation, tuple[int, ...]]:
    w = as_permutation(w)
    return w, as_partition(lam, len(w))


def minimal_representative(w: Sequence[int], lam: Sequence[int]) -> Permutation:
    """Shortest ``u`` with ``u(lam) == w(lam)``."""
    w, lam = _prepare(w, lam)
    return perm_of_composition(apply_perm(w, lam))


def atom_via_ssaf(w: Sequence[int], lam: Sequence[int]) -> Polynomial:
    w, lam = _prepare(w, lam)
    return e_poly(apply_perm(w, lam))


@lru_cache(maxsize=None)
def _atom_word(w: Permutation, lam: tuple[int, ...], op: str) -> Polynomial:
    return apply_word(monomial_of(lam), reduced_word(w), op)


def atom_via_operators(w: Sequence[int], lam: Sequence[int]) -> Polynomial:
    """``pibar_w`` applied to ``x^lam``.

    The atom depends only on ``w(lam)``; the operator formula is run on the
    shortest permutation producing that composition.  (On a longer coset
    representative the raw formula vanishes.)
    """
    return _atom_word(minimal_representative(w, lam), as_partition(lam, len(w)), "pibar")


def atom_tableaux(w: Sequence[int], lam: Sequence[int],
                  lift: Callable[[SSYT, int, int], list[tuple[SSYT, int]]] = theta_lift,
                  ) -> dict[SSYT, int]:
    """Signed tableau sum obtained by applying exchange operators to the Yamanouchi tableau.

    Uses the reduced word of the shortest permutation producing ``w(lam)``;
    the last letter acts first.  Terms cancel in the sum, and what survives
    should be the tableaux with right key ``key(w(lam))``, each once.
    """
    u = minimal_representative(w, lam)
    n = len(u)
    current = {yamanouchi(lam): 1}
    for i in reversed(reduced_word(u)):
        nxt: dict[SSYT, int] = {}
        for t, c in current.items():
            for s, sign in lift(t, i, n):
                nxt[s] = nxt.get(s, 0) + sign * c
        current = {t: c for t, c in nxt.items() if c}
    return current


def atom_via_theta(w: Sequence[int], lam: Sequence[int],
                   lift: Callable[[SSYT, int, int], list[tuple[SSYT, int]]] = theta_lift,
                   ) -> Polynomial:
    """Weight of :func:`atom_tableaux`."""
    n = len(w)
    terms: dict[tuple[int, ...], int] = {}
    for t, c in atom_tableaux(w, lam, lift).items():
        e = content(t, n)
        terms[e] = terms.get(e, 0) + c
    return Polynomial(terms, n=n)


def right_key(t: SSYT, n: int | None = None) -> SSYT:
    """Right key of ``t``: the key whose content is the shape of ``psi(t)``."""
    return key_of_composition(psi(t, n).shape)


def key_tableau_of_perm(w: Sequence[int], column_heights: Sequence[int]) -> SSYT:
    """Column ``j`` holds the first ``column_heights[j]`` letters of ``w``."""
    heights = [h for h in column_heights if h]
    if any(a < b for a, b in zip(heights, heights[1:])):
        raise ValueError(f"column heights {tuple(column_heights)} are not weakly decreasing")
    if heights and heights[0] > len(w):
        raise ValueError("column taller than the permutation")
    return from_columns([tuple(sorted(w[:h])) for h in heights])


def key_tableau(w: Sequence[int], lam: Sequence[int]) -> SSYT:
    """The key bounding the Demazure character of ``w(lam)``: ``key(w(lam))``."""
    w, lam = _prepare(w, lam)
    return key_of_composition(apply_perm(w, lam))


@lru_cache(maxsize=None)
def _key_word(w: Permutation, lam: tuple[int, ...]) -> Polynomial:
    return apply_word(monomial_of(lam), reduced_word(w), "pi")


def key_poly_via_operators(w: Sequence[int], lam: Sequence[int]) -> Polynomial:
    w, lam = _prepare(w, lam)
    return _key_word(w, lam)


def key_poly_via_atoms(gamma: Sequence[int]) -> Polynomial:
    """Sum of ``e_poly(alpha)`` over rearrangements ``alpha`` below ``gamma`` in Bruhat order."""
    gamma = tuple(gamma)
    top = perm_of_composition(gamma)
    total = Polynomial.zero(len(gamma))
    for alpha in rearrangements(sort_desc(gamma)):
        if bruhat_leq(perm_of_composition(alpha), top):
            total = total + e_poly(alpha)
    return total


def enumerate_pb(lam: Sequence[int], w: Sequence[int]) -> list[PermutedSSAF]:
    """Fillings of partition shape ``lam`` over the basement ``w``."""
    w, lam = _prepare(w, lam)
    return [PermutedSSAF(f.columns, f.basement) for f in enumerate_fillings(lam, w)]


def validate_pb(g: SSAF) -> bool:
    shape = g.shape
    if any(a < b for a, b in zip(shape, shape[1:])):
        return False
    return validate_filling(g)


def key_poly_via_pb(lam: Sequence[int], w: Sequence[int]) -> Polynomial:
    w, lam = _prepare(w, lam)
    terms: dict[tuple[int, ...], int] = {}
    for g in enumerate_fillings(lam, w):
        e = weight_of(g)
        terms[e] = terms.get(e, 0) + 1
    return Polynomial(terms, n=len(w))


def pb_from_ssaf(f: SSAF, w: Sequence[int]) -> PermutedSSAF:
    """Re-place the rows of ``f`` greedily over the basement ``w``."""
    g = rho(rows_of(f), as_permutation(w))
    return PermutedSSAF(g.columns, g.basement)


def ssaf_from_pb(g: SSAF) -> SSAF:
    """Re-place the rows of ``g`` greedily over the ordinary basement."""
    return rho(rows_of(g), g.n)
