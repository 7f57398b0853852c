import pytest
from hypothesis import given, settings, strategies as st

from skyline.core import all_permutations, reduced_word, word_product
from skyline.polynomial import (
    Polynomial, apply_word, divided_difference, monomial_of, pi, pibar, swap_vars, theta,
)


def x(*e):
    return monomial_of(e)


def polys(n):
    term = st.tuples(st.tuples(*[st.integers(0, 3)] * n), st.integers(-3, 3))
    return st.lists(term, max_size=5).map(lambda ts: Polynomial(ts, n=n))


def test_arithmetic_and_equality():
    p = x(1, 0) + x(0, 1)
    assert p * p == x(2, 0) + 2 * x(1, 1) + x(0, 2)
    assert p - p == 0
    assert (p - p).to_text() == "0"
    assert Polynomial.constant(3, 2) == 3
    assert Polynomial.variable(2, 2) == x(0, 1)
    with pytest.raises(ValueError):
        x(1, 0) + x(1, 0, 0)


def test_text_rendering():
    p = x(2, 1, 0) + 2 * x(1, 0, 1) - x(0, 0, 1)
    assert p.to_text() == "x1^2*x2 + 2*x1*x3 - x3"
    assert (-x(0, 0)).to_text() == "-1"
    assert (3 * x(0, 2)).to_text() == "3*x2^2"


def test_json_round_trip():
    p = x(2, 1, 0) - 4 * x(0, 0, 3) + 1
    data = p.to_json()
    assert data[0] == {"coeff": 1, "exponents": [2, 1, 0]}
    assert Polynomial.from_json(data, 3) == p
    assert Polynomial.from_json([], 3) == Polynomial.zero(3)


def test_pi_goldens():
    assert pi(x(2, 1, 0), 2) == x(2, 1, 0) + x(2, 0, 1)
    assert pi(x(2, 1, 0), 1) == x(2, 1, 0) + x(1, 2, 0)
    assert apply_word(x(2, 1, 0), (1, 2), "pi") == (
        x(2, 1, 0) + x(2, 0, 1) + x(1, 2, 0) + x(1, 1, 1) + x(0, 2, 1))
    assert pi(x(0, 1), 1) == 0
    assert pi(x(1, 1), 1) == x(1, 1)


def test_pibar_goldens():
    assert pibar(x(2, 1, 1), 1) == x(1, 2, 1)
    # pi_1 fixes x1*x2, so pi_1 - 1 kills it
    assert pibar(x(1, 1), 1) == 0
    assert apply_word(x(2, 1, 0), (2, 1), "pibar") == x(1, 1, 1) + x(1, 0, 2)


def test_theta_goldens():
    assert theta(x(3, 4, 1, 0, 1, 0, 3), 2) == (
        x(3, 3, 2, 0, 1, 0, 3) + x(3, 2, 3, 0, 1, 0, 3) + x(3, 1, 4, 0, 1, 0, 3))
    assert theta(x(1, 1), 1) == 0
    # k < 0 is minus the monomial and its shifts back towards x_i
    assert theta(x(0, 2), 1) == -x(0, 2) - x(1, 1)


def test_index_out_of_range():
    for op in (pi, pibar, theta, divided_difference):
        with pytest.raises(ValueError):
            op(x(1, 0), 2)
        with pytest.raises(ValueError):
            op(x(1, 0), 0)


@settings(max_examples=60, deadline=None)
@given(polys(3), st.sampled_from([1, 2]))
def test_divided_difference_is_exact(f, i):
    d = x(1, 0, 0) - x(0, 1, 0) if i == 1 else x(0, 1, 0) - x(0, 0, 1)
    assert d * divided_difference(f, i) == f - swap_vars(f, i)


@settings(max_examples=60, deadline=None)
@given(polys(3), st.sampled_from([1, 2]))
def test_pi_relations(f, i):
    xi = x(1, 0, 0) if i == 1 else x(0, 1, 0)
    assert pi(f, i) == divided_difference(xi * f, i)
    assert pi(pi(f, i), i) == pi(f, i)
    assert pibar(f, i) == pi(f, i) - f
    assert pibar(pibar(f, i), i) == -pibar(f, i)


@settings(max_examples=40, deadline=None)
@given(polys(3))
def test_braid_relations(f):
    for op in ("pi", "pibar", "ddiff"):
        assert apply_word(f, (1, 2, 1), op) == apply_word(f, (2, 1, 2), op)


@settings(max_examples=30, deadline=None)
@given(polys(4))
def test_commuting_far_apart(f):
    for op in ("pi", "pibar"):
        assert apply_word(f, (1, 3), op) == apply_word(f, (3, 1), op)


def test_operators_independent_of_reduced_word():
    f = x(3, 1, 1, 0)
    for w in all_permutations(4):
        word = reduced_word(w)
        alt = _another_reduced_word(w)
        assert word_product(alt, 4) == w and len(alt) == len(word)
        for op in ("pi", "pibar"):
            assert apply_word(f, word, op) == apply_word(f, alt, op)


def _another_reduced_word(w):
    # bubble the smallest misplaced value leftwards instead
    cur = list(w)
    swaps = []
    for value in range(1, len(cur) + 1):
        pos = cur.index(value)
        while pos > value - 1:
            cur[pos - 1], cur[pos] = cur[pos], cur[pos - 1]
            swaps.append(pos)
            pos -= 1
    return tuple(reversed(swaps))


def test_apply_word_last_letter_acts_first():
    f = x(2, 1, 0)
    assert apply_word(f, (1, 2), "pi") == pi(pi(f, 2), 1)
    assert apply_word(f, (1, 2), lambda g, i: pi(g, i)) == pi(pi(f, 2), 1)


def test_theta_agrees_with_pibar_on_monomials():
    for p in range(6):
        for q in range(6):
            m = x(p, q, 1)
            assert theta(m, 1) == pibar(m, 1)
