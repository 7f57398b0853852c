"""Sparse multivariate polynomials with integer coefficients.

A :class:`Polynomial` maps exponent tuples of a fixed length ``n`` to nonzero
ints.  Terms iterate in decreasing lex order of their exponents, so printed
output is canonical.

The Demazure-type operators act one monomial at a time through closed forms,
which keeps every computation inside ``Z[x_1..x_n]``; nothing is ever divided.
Operator indices are 1-based, ``1 <= i < n``.
"""

from __future__ import annotations

from typing import Callable, Iterable, Iterator, Mapping, Sequence

__all__ = [
    "Polynomial", "monomial_of", "swap_vars", "divided_difference", "pi",
    "pibar", "theta", "apply_word", "OPERATORS",
]

Exponent = tuple[int, ...]


class Polynomial:
    """Immutable sparse polynomial in ``x_1..x_n``."""

    __slots__ = ("n", "_terms", "_hash")

    def __init__(self, terms: Mapping[Sequence[int], int] | Iterable[tuple[Sequence[int], int]] = (),
                 n: int | None = None):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Exponent, int] = {}
        for exps, coeff in items:
            exps = tuple(exps)
            if n is None:
                n = len(exps)
            if len(exps) != n:
                raise ValueError(f"exponent {exps} does not have length {n}")
            if any(e < 0 for e in exps):
                raise ValueError(f"negative exponent in {exps}")
            acc[exps] = acc.get(exps, 0) + int(coeff)
        if n is None:
            raise ValueError("cannot infer the number of variables of an empty polynomial")
        self.n = n
        self._terms = {e: c for e, c in acc.items() if c}
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict[Exponent, int], n: int) -> Polynomial:
        # trusted constructor: terms already clean
        poly = cls.__new__(cls)
        poly.n = n
        poly._terms = terms
        poly._hash = None
        return poly

    @classmethod
    def zero(cls, n: int) -> Polynomial:
        return cls._raw({}, n)

    @classmethod
    def constant(cls, c: int, n: int) -> Polynomial:
        return cls._raw({(0,) * n: c} if c else {}, n)

    @classmethod
    def variable(cls, i: int, n: int) -> Polynomial:
        if not 1 <= i <= n:
            raise ValueError(f"x{i} is not a variable when n = {n}")
        exps = [0] * n
        exps[i - 1] = 1
        return cls._raw({tuple(exps): 1}, n)

    # container protocol

    def items(self) -> list[tuple[Exponent, int]]:
        return sorted(self._terms.items(), reverse=True)

    def __iter__(self) -> Iterator[tuple[Exponent, int]]:
        return iter(self.items())

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __contains__(self, exps: object) -> bool:
        return exps in self._terms

    def coefficient(self, exps: Sequence[int]) -> int:
        return self._terms.get(tuple(exps), 0)

    def as_dict(self) -> dict[Exponent, int]:
        return dict(self._terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            return self == Polynomial.constant(other, self.n)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.n == other.n and self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.n, frozenset(self._terms.items())))
        return self._hash

    # arithmetic

    def _check(self, other: Polynomial) -> None:
        if other.n != self.n:
            raise ValueError(f"polynomials in {self.n} and {other.n} variables")

    def _coerce(self, other) -> Polynomial:
        if isinstance(other, int):
            return Polynomial.constant(other, self.n)
        if isinstance(other, Polynomial):
            self._check(other)
            return other
        return NotImplemented

    def __add__(self, other) -> Polynomial:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for e, c in other._terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return Polynomial._raw(out, self.n)

    __radd__ = __add__

    def __neg__(self) -> Polynomial:
        return Polynomial._raw({e: -c for e, c in self._terms.items()}, self.n)

    def __sub__(self, other) -> Polynomial:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> Polynomial:
        return (-self) + other

    def __mul__(self, other) -> Polynomial:
        if isinstance(other, int):
            if not other:
                return Polynomial.zero(self.n)
            return Polynomial._raw({e: c * other for e, c in self._terms.items()}, self.n)
        if not isinstance(other, Polynomial):
            return NotImplemented
        self._check(other)
        out: dict[Exponent, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return Polynomial._raw({e: c for e, c in out.items() if c}, self.n)

    __rmul__ = __mul__

    # rendering

    def __str__(self) -> str:
        return self.to_text()

    def __repr__(self) -> str:
        return f"Polynomial({self.to_text()!r}, n={self.n})"

    def to_text(self) -> str:
        """Render as ``x1^2*x2 + 2*x1*x3 - x3``."""
        if not self._terms:
            return "0"
        out = []
        for k, (exps, coeff) in enumerate(self.items()):
            mono = "*".join(
                f"x{i}" if e == 1 else f"x{i}^{e}"
                for i, e in enumerate(exps, start=1) if e
            )
            mag = abs(coeff)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            if k == 0:
                out.append(body if coeff > 0 else f"-{body}")
            else:
                out.append((" + " if coeff > 0 else " - ") + body)
        return "".join(out)

    def to_json(self) -> list[dict]:
        return [{"coeff": c, "exponents": list(e)} for e, c in self.items()]

    @classmethod
    def from_json(cls, data: list[dict], n: int) -> Polynomial:
        return cls(((t["exponents"], t["coeff"]) for t in data), n=n)


def monomial_of(c: Sequence[int]) -> Polynomial:
    """``x^c`` for a weak composition ``c``."""
    return Polynomial._raw({tuple(c): 1}, len(c))


def _check_index(f: Polynomial, i: int) -> None:
    if not 1 <= i < f.n:
        raise ValueError(f"operator index {i} out of range for {f.n} variables")


def _map_terms(f: Polynomial, i: int,
               rule: Callable[[int, int], Iterable[tuple[int, int, int]]]) -> Polynomial:
    """Replace each term's exponents at ``(i, i+1)`` by the ``(p, q, sign)`` triples of ``rule``."""
    _check_index(f, i)
    a, b = i - 1, i
    out: dict[Exponent, int] = {}
    for exps, coeff in f._terms.items():
        for p, q, sign in rule(exps[a], exps[b]):
            e = exps[:a] + (p, q) + exps[b + 1:]
            out[e] = out.get(e, 0) + sign * coeff
    return Polynomial._raw({e: c for e, c in out.items() if c}, f.n)


def swap_vars(f: Polynomial, i: int) -> Polynomial:
    """Exchange ``x_i`` and ``x_{i+1}``."""
    return _map_terms(f, i, lambda p, q: ((q, p, 1),))


def _ddiff(p: int, q: int) -> list[tuple[int, int, int]]:
    # (x_i^p x_{i+1}^q - x_i^q x_{i+1}^p) / (x_i - x_{i+1})
    if p > q:
        return [(t, p + q - 1 - t, 1) for t in range(q, p)]
    if p < q:
        return [(t, p + q - 1 - t, -1) for t in range(p, q)]
    return []


def divided_difference(f: Polynomial, i: int) -> Polynomial:
    """``(f - s_i f) / (x_i - x_{i+1})``."""
    return _map_terms(f, i, _ddiff)


def pi(f: Polynomial, i: int) -> Polynomial:
    """Isobaric divided difference: divided difference of ``x_i * f``."""
    return _map_terms(f, i, lambda p, q: _ddiff(p + 1, q))


def _pibar(p: int, q: int) -> list[tuple[int, int, int]]:
    return _ddiff(p + 1, q) + [(p, q, -1)]


def pibar(f: Polynomial, i: int) -> Polynomial:
    """``pi_i - 1``."""
    return _map_terms(f, i, _pibar)


def _theta(p: int, q: int) -> list[tuple[int, int, int]]:
    if p >= q:
        # k = p - q >= 0: move 1..k units from x_i to x_{i+1}
        return [(p - s, q + s, 1) for s in range(1, p - q + 1)]
    # k < 0: minus the monomial and its first |k| - 1 shifts back towards x_i
    return [(p + s, q - s, -1) for s in range(q - p)]


def theta(f: Polynomial, i: int) -> Polynomial:
    """Term-wise exchange operator.

    For ``k = m_i - m_{i+1} >= 0`` a monomial goes to the ``k`` monomials
    obtained by moving one, two, ..., ``k`` units of degree from ``x_i`` to
    ``x_{i+1}`` (so ``k = 0`` gives zero).  For ``k < 0`` it goes to minus
    the monomial and its ``|k| - 1`` successive moves back towards ``x_i``.
    This is the commutative image of :func:`skyline.tableaux.theta_lift`.
    """
    return _map_terms(f, i, _theta)


OPERATORS: dict[str, Callable[[Polynomial, int], Polynomial]] = {
    "pi": pi,
    "pibar": pibar,
    "theta": theta,
    "ddiff": divided_difference,
}


def apply_word(f: Polynomial, word: Sequence[int], op: str | Callable = "pi") -> Polynomial:
    """Apply ``op_{i1} op_{i2} ... op_{ik}`` to ``f``.

    This is operator composition, so the last letter acts first; with
    ``word = reduced_word(w)`` the result is ``op_w(f)``.
    """
    fn = OPERATORS[op] if isinstance(op, str) else op
    for i in reversed(word):
        f = fn(f, i)
    return f
