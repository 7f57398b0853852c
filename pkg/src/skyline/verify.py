"""Exhaustive cross-checks between the independent constructions.

Each ``check_*`` function sweeps a bounded range and returns a
:class:`CheckResult`; the first failing input is kept as a counterexample.
``run_all`` drives the whole battery for the ``verify`` command.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Callable, Iterator

from .core import (
    all_permutations, apply_perm, as_partition, bruhat_leq, conjugate, identity,
    longest, partitions, perm_of_composition, rearrangements, simple_reflection,
    sort_desc,
)
from .demazure import (
    atom_tableaux, atom_via_operators, atom_via_ssaf, atom_via_theta,
    enumerate_pb, key_poly_via_atoms, key_poly_via_operators, key_poly_via_pb,
    key_tableau, key_tableau_of_perm, pb_from_ssaf, right_key, ssaf_from_pb,
)
from .polynomial import Polynomial, apply_word, monomial_of, pi, pibar, theta
from .ssaf import (
    SSAF, e_poly, enumerate_ssaf, psi, reading_word, rho, rows_of, theta_cap,
    validate as validate_filling, weight_of,
)
from .tableaux import (
    SSYT, col_word, colform, content, crystal_f, crystal_graph, enumerate_ssyt,
    from_columns, key_of_composition, knuth_class, right_key_oracle, schur,
    theta_lift,
)

__all__ = [
    "CheckResult", "check_atoms", "check_key_polynomials", "check_right_keys",
    "check_crystal_commutes", "check_lowering_shapes", "check_schur",
    "check_goldens", "check_pb_bijection", "run_all", "golden_cases",
]


@dataclass
class CheckResult:
    name: str
    passed: bool = True
    cases: int = 0
    counterexample: str | None = None
    seconds: float = 0.0
    notes: list[str] = field(default_factory=list)

    def fail(self, detail: str) -> None:
        if self.passed:
            self.counterexample = detail
        self.passed = False

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        out = f"{status}  {self.name}  ({self.cases} cases, {self.seconds:.2f}s)"
        if self.counterexample:
            out += f"\n      counterexample: {self.counterexample}"
        return out


def _timed(fn):
    def wrapper(*args, **kwargs):
        start = time.perf_counter()
        result = fn(*args, **kwargs)
        result.seconds = time.perf_counter() - start
        return result
    wrapper.__name__ = fn.__name__
    wrapper.__doc__ = fn.__doc__
    return wrapper


def padded_partitions(max_n: int, max_size: int) -> Iterator[tuple[int, tuple[int, ...]]]:
    """``(n, lam)`` for ``1 <= n <= max_n`` and ``|lam| <= max_size``, ``lam`` padded to ``n``."""
    for n in range(1, max_n + 1):
        for size in range(max_size + 1):
            for lam in partitions(size, n):
                yield n, as_partition(lam, n)


def compositions(n: int, max_size: int) -> Iterator[tuple[int, ...]]:
    for n_, lam in padded_partitions(n, max_size):
        if n_ == n:
            yield from rearrangements(lam)


@_timed
def check_atoms(max_n: int = 5, max_size: int = 8, lift=theta_lift) -> CheckResult:
    """Atoms from pibar operators, from exchange operators on tableaux, and from fillings agree."""
    res = CheckResult("atoms: pibar operators = exchange operators = skyline fillings")
    for n, lam in padded_partitions(max_n, max_size):
        for w in all_permutations(n):
            res.cases += 1
            a = atom_via_operators(w, lam)
            b = atom_via_theta(w, lam, lift)
            c = atom_via_ssaf(w, lam)
            if not (a == b == c):
                res.fail(f"w={w} lam={lam}: operators={a} theta={b} fillings={c}")
                return res
    return res


@_timed
def check_atom_tableaux(max_n: int = 4, max_size: int = 6) -> CheckResult:
    """The exchange-operator sum is exactly the tableaux whose right key is key(w(lam))."""
    res = CheckResult("atoms: surviving tableaux are those with the expected right key")
    for n, lam in padded_partitions(max_n, max_size):
        gammas = {}
        for w in all_permutations(n):
            gammas.setdefault(apply_perm(w, lam), w)
        expected: dict[tuple[int, ...], set[SSYT]] = {g: set() for g in gammas}
        for t in enumerate_ssyt(lam, n):
            expected[psi(t, n).shape].add(t)
        for g, w in gammas.items():
            res.cases += 1
            got = atom_tableaux(w, lam)
            if any(c != 1 for c in got.values()) or set(got) != expected[g]:
                res.fail(f"w={w} lam={lam}")
                return res
    return res


@_timed
def check_key_polynomials(max_n: int = 5, max_size: int = 8) -> CheckResult:
    """Key polynomials from pi operators, from atoms under Bruhat, and from permuted basements agree."""
    res = CheckResult("key polynomials: pi operators = sum of atoms = permuted basements")
    for n, lam in padded_partitions(max_n, max_size):
        for w in all_permutations(n):
            res.cases += 1
            a = key_poly_via_operators(w, lam)
            b = key_poly_via_atoms(apply_perm(w, lam))
            c = key_poly_via_pb(lam, w)
            if not (a == b == c):
                res.fail(f"w={w} lam={lam}: operators={a} atoms={b} basements={c}")
                return res
    return res


@_timed
def check_right_keys(max_size: int = 6, max_entry: int = 4, cap: int = 100_000) -> CheckResult:
    """Insertion right key equals the Knuth-class right key."""
    res = CheckResult("right keys: insertion shape = column-frank oracle")
    for size in range(max_size + 1):
        for lam in partitions(size, max_entry):
            for t in enumerate_ssyt(lam, max_entry):
                res.cases += 1
                fast = right_key(t, max_entry)
                slow = right_key_oracle(t, cap)
                if fast != slow:
                    res.fail(f"T={t.label()}: insertion={fast.label()} oracle={slow.label()}")
                    return res
    return res


@_timed
def check_crystal_commutes(max_n: int = 5, max_size: int = 7) -> CheckResult:
    """psi(f_i T) == Theta_i(psi T)."""
    res = CheckResult("crystal: insertion intertwines f_i with the filling lowering operator")
    for n, lam in padded_partitions(max_n, max_size):
        for t in enumerate_ssyt(lam, n):
            f = psi(t, n)
            for i in range(1, n):
                res.cases += 1
                left = psi(crystal_f(t, i), n)
                right = theta_cap(f, i)
                if left != right:
                    res.fail(f"T={t.label()} i={i}: {left.columns} != {right.columns}")
                    return res
    return res


@_timed
def check_lowering_shapes(max_n: int = 5, max_size: int = 7) -> CheckResult:
    """Theta_i keeps the shape or swaps columns i and i+1."""
    res = CheckResult("lowering: shape is preserved or swapped at i, i+1")
    for n in range(1, max_n + 1):
        for gamma in compositions(n, max_size):
            for f in enumerate_ssaf(gamma):
                for i in range(1, n):
                    res.cases += 1
                    g = theta_cap(f, i)
                    swapped = apply_perm(simple_reflection(i, n), gamma)
                    if g.shape not in (gamma, swapped) or not validate_filling(g):
                        res.fail(f"F={f.columns} i={i} -> shape {g.shape}")
                        return res
    return res


@_timed
def check_schur(max_n: int = 5, max_size: int = 8) -> CheckResult:
    """Atoms over distinct rearrangements, and the longest key polynomial, both give s_lam."""
    res = CheckResult("schur: sum of atoms = key polynomial of w0 = tableau sum")
    for n, lam in padded_partitions(max_n, max_size):
        res.cases += 1
        s = schur(lam, n)
        total = Polynomial.zero(n)
        for g in rearrangements(lam):
            total = total + e_poly(g)
        top = key_poly_via_operators(longest(n), lam)
        if not (total == s == top):
            res.fail(f"lam={lam}: atoms={total} w0={top} schur={s}")
            return res
    return res


@_timed
def check_pb_bijection(max_n: int = 4, max_size: int = 6) -> CheckResult:
    """Row-preserving maps between fillings below w(lam) and permuted-basement fillings."""
    res = CheckResult("permuted basements: bijection with fillings below w(lam)")
    for n, lam in padded_partitions(max_n, max_size):
        res.cases += 1
        if len(enumerate_pb(lam, longest(n))) != len(enumerate_ssyt(lam, n)):
            res.fail(f"lam={lam}: |pb(lam, w0)| != number of tableaux")
            return res
        for w in all_permutations(n):
            res.cases += 1
            top = perm_of_composition(apply_perm(w, lam))
            below = [f for g in rearrangements(lam)
                     if bruhat_leq(perm_of_composition(g), top)
                     for f in enumerate_ssaf(g)]
            images = [pb_from_ssaf(f, w) for f in below]
            target = set(enumerate_pb(lam, w))
            ok = (len(set(images)) == len(images) and set(images) == target
                  and all(ssaf_from_pb(g) == f and weight_of(g) == weight_of(f)
                          for f, g in zip(below, images)))
            if not ok:
                res.fail(f"w={w} lam={lam}")
                return res
    return res


def golden_cases() -> list[tuple[str, Callable[[], bool]]]:
    """Worked examples with known answers."""
    x = lambda *e: monomial_of(e)  # noqa: E731
    fig5 = SSYT(((1, 2, 2, 3), (2, 3, 3, 6), (4, 5)))
    s_tab = from_columns([(1, 2, 3, 5), (2, 4)])
    kappa_312 = (x(2, 1, 0) + x(1, 2, 0) + x(2, 0, 1) + x(1, 1, 1) + x(1, 0, 2))

    def crystal_ok() -> bool:
        g = crystal_graph((2, 1), 3)
        edges = {(g.nodes[a].label(), g.nodes[b].label(), i) for a, b, i in g.edges}
        return len(g.nodes) == 8 and edges == {
            ("1,1/2", "1,2/2", 1), ("1,1/2", "1,1/3", 2),
            ("1,2/2", "1,3/2", 2), ("1,1/3", "1,2/3", 1),
            ("1,2/3", "2,2/3", 1), ("1,3/2", "1,3/3", 2),
            ("2,2/3", "2,3/3", 2), ("1,3/3", "2,3/3", 1),
        }

    def fig6_fillings() -> bool:
        got = sorted(f.columns for f in enumerate_pb((2, 1, 0), (3, 1, 2)))
        return got == [((2, 1), (1,), ()), ((2, 2), (1,), ()), ((3, 1), (1,), ()),
                       ((3, 2), (1,), ()), ((3, 3), (1,), ())]

    return [
        ("pi_1 pi_2 x1^2 x2 has five terms",
         lambda: apply_word(x(2, 1, 0), (1, 2), "pi")
         == x(2, 1, 0) + x(2, 0, 1) + x(1, 2, 0) + x(1, 1, 1) + x(0, 2, 1)),
        ("pi_2 x1^2 x2", lambda: pi(x(2, 1, 0), 2) == x(2, 1, 0) + x(2, 0, 1)),
        ("pi_1 x1^2 x2", lambda: pi(x(2, 1, 0), 1) == x(2, 1, 0) + x(1, 2, 0)),
        ("pibar_1 x1^2 x2 x3", lambda: pibar(x(2, 1, 1), 1) == x(1, 2, 1)),
        ("theta_2 x1^3 x2^4 x3 x5 x7^3",
         lambda: theta(x(3, 4, 1, 0, 1, 0, 3), 2)
         == x(3, 3, 2, 0, 1, 0, 3) + x(3, 2, 3, 0, 1, 0, 3) + x(3, 1, 4, 0, 1, 0, 3)),
        ("key(2,1,1,4,0,3)",
         lambda: key_of_composition((2, 1, 1, 4, 0, 3))
         == SSYT(((1, 1, 4, 4), (2, 4, 6), (3, 6), (4,), (6,)))),
        ("column forms (1,3,2) and (2,4)",
         lambda: colform((3, 5, 4, 2, 2, 1)) == (1, 3, 2) and colform((4, 2, 5, 3, 2, 1)) == (2, 4)),
        ("Knuth equivalences",
         lambda: (3, 5, 4, 2, 2, 1) in knuth_class(col_word(s_tab))
         and (4, 2, 5, 3, 2, 1) in knuth_class((4, 3, 2, 1, 5, 2))),
        ("right key 5421.42",
         lambda: col_word(right_key(s_tab)) == (5, 4, 2, 1, 4, 2)
         and col_word(right_key_oracle(s_tab)) == (5, 4, 2, 1, 4, 2)),
        ("key of 241635 with heights 4,2,2,1",
         lambda: col_word(key_tableau_of_perm((2, 4, 1, 6, 3, 5), (4, 2, 2, 1)))
         == (6, 4, 2, 1, 4, 2, 4, 2, 2)),
        ("crystal graph of (2,1) in 3 letters", crystal_ok),
        ("permutation of (1,0,3,3,0,1,2,0)",
         lambda: perm_of_composition((1, 0, 3, 3, 0, 1, 2, 0)) == (3, 4, 7, 1, 6, 2, 5, 8)),
        ("insertion of the 4+4+2 tableau",
         lambda: psi(fig5, 6).columns == ((), (2, 2), (3, 3, 3, 2), (), (), (6, 5, 4, 1))
         and right_key(fig5, 6) == SSYT(((2, 2, 3, 3), (3, 3, 6, 6), (6, 6)))),
        ("key polynomial of (3,1,2), (2,1)",
         lambda: key_poly_via_pb((2, 1, 0), (3, 1, 2)) == kappa_312
         and key_poly_via_operators((3, 1, 2), (2, 1, 0)) == kappa_312),
        ("five permuted-basement fillings of (2,1) over 312", fig6_fillings),
    ]


@_timed
def check_goldens() -> CheckResult:
    res = CheckResult("worked examples")
    for name, fn in golden_cases():
        res.cases += 1
        if not fn():
            res.fail(name)
    return res


def run_all(max_n: int = 5, max_size: int = 8, lift=theta_lift) -> list[CheckResult]:
    """Run every check, each at ``min`` of its own bound and the given bounds."""
    n = max_n
    return [
        check_goldens(),
        check_atoms(n, min(max_size, 8), lift),
        check_atom_tableaux(min(n, 4), min(max_size, 6)),
        check_key_polynomials(n, min(max_size, 8)),
        check_right_keys(min(max_size, 6), min(n, 4)),
        check_crystal_commutes(n, min(max_size, 7)),
        check_lowering_shapes(n, min(max_size, 7)),
        check_schur(n, min(max_size, 8)),
        check_pb_bijection(min(n, 4), min(max_size, 6)),
    ]
