import pytest

from skyline.core import (
    all_permutations, apply_perm, as_partition, bruhat_leq, conjugate, longest,
    partitions, perm_of_composition, rearrangements, reduced_word, sort_desc,
)
from skyline.demazure import (
    atom_tableaux, atom_via_operators, atom_via_ssaf, atom_via_theta, enumerate_pb,
    key_poly_via_atoms, key_poly_via_operators, key_poly_via_pb, key_tableau,
    key_tableau_of_perm, minimal_representative, pb_from_ssaf, right_key, ssaf_from_pb,
    validate_pb,
)
from skyline.polynomial import apply_word, monomial_of
from skyline.ssaf import SSAF, PermutedSSAF, enumerate_ssaf, rho, validate
from skyline.tableaux import SSYT, col_word, from_columns, key_of_composition, schur


def x(*e):
    return monomial_of(e)


def kappa_312():
    return x(2, 1, 0) + x(1, 2, 0) + x(2, 0, 1) + x(1, 1, 1) + x(1, 0, 2)


@pytest.mark.parametrize("w, lam, expected", [
    ((1, 2, 3), (2, 1, 0), x(2, 1, 0)),
    ((1, 3, 2), (2, 1, 0), x(2, 0, 1)),
    ((3, 1, 2), (2, 1, 0), x(1, 1, 1) + x(1, 0, 2)),
    ((2, 1, 3), (2, 1, 0), x(1, 2, 0)),
])
def test_atom_examples(w, lam, expected):
    assert atom_via_operators(w, lam) == expected
    assert atom_via_theta(w, lam) == expected
    assert atom_via_ssaf(w, lam) == expected


def test_minimal_representative():
    assert minimal_representative((2, 1, 3), (1, 1, 0)) == (1, 2, 3)
    assert minimal_representative((3, 2, 1), (2, 1, 0)) == (3, 2, 1)


def test_raw_pibar_word_vanishes_on_a_longer_representative():
    # s_1 fixes x1*x2, so the word for (2,1) over lam=(1,1) gives zero
    assert apply_word(x(1, 1), reduced_word((2, 1)), "pibar") == 0
    assert atom_via_operators((2, 1), (1, 1)) == x(1, 1)
    assert atom_via_ssaf((2, 1), (1, 1)) == x(1, 1)


def test_atom_tableaux_are_exactly_the_right_key_class():
    n, lam = 4, (2, 1, 1, 0)
    for w in all_permutations(n):
        got = atom_tableaux(w, lam)
        assert set(got.values()) <= {1}
        target = key_tableau(w, lam)
        assert got and all(right_key(t, n) == target for t in got)


def test_right_key_examples():
    s = from_columns([(1, 2, 3, 5), (2, 4)])
    assert col_word(right_key(s)) == (5, 4, 2, 1, 4, 2)
    t = SSYT(((1, 2, 2, 3), (2, 3, 3, 6), (4, 5)))
    assert right_key(t, 6) == SSYT(((2, 2, 3, 3), (3, 3, 6, 6), (6, 6)))
    assert right_key(SSYT(((1, 1, 1), (2, 2), (3,))), 3) == key_of_composition((3, 2, 1))
    for gamma in rearrangements((2, 2, 1, 0)):
        assert right_key(key_of_composition(gamma), 4) == key_of_composition(gamma)


def test_key_tableau_of_perm_example():
    k = key_tableau_of_perm((2, 4, 1, 6, 3, 5), (4, 2, 2, 1))
    assert col_word(k) == (6, 4, 2, 1, 4, 2, 4, 2, 2)
    with pytest.raises(ValueError):
        key_tableau_of_perm((1, 2, 3), (1, 2))


def test_key_of_composition_matches_perm_construction():
    for n in range(1, 5):
        for size in range(7):
            for lam in partitions(size, n):
                for gamma in rearrangements(as_partition(lam, n)):
                    heights = conjugate(sort_desc(gamma))
                    assert key_tableau_of_perm(perm_of_composition(gamma), heights) == key_of_composition(gamma)


def test_key_polynomial_examples():
    assert key_poly_via_operators((3, 1, 2), (2, 1, 0)) == kappa_312()
    assert key_poly_via_atoms((1, 0, 2)) == kappa_312()
    assert key_poly_via_pb((2, 1, 0), (3, 1, 2)) == kappa_312()
    assert key_poly_via_operators((1, 2, 3), (2, 1, 0)) == x(2, 1, 0)
    assert key_poly_via_operators(longest(3), (2, 1, 0)) == schur((2, 1), 3)


def test_key_polynomials_grow_along_bruhat_order():
    n, lam = 4, (2, 1, 1, 0)
    polys = {w: key_poly_via_operators(w, lam) for w in all_permutations(n)}
    for u in polys:
        for v in polys:
            if bruhat_leq(u, v):
                for e, c in polys[u]:
                    assert polys[v].coefficient(e) >= c


def test_permuted_basement_fillings_over_312():
    got = sorted(f.columns for f in enumerate_pb((2, 1, 0), (3, 1, 2)))
    assert got == [((2, 1), (1,), ()), ((2, 2), (1,), ()), ((3, 1), (1,), ()),
                   ((3, 2), (1,), ()), ((3, 3), (1,), ())]
    assert all(isinstance(f, PermutedSSAF) and validate_pb(f) for f in enumerate_pb((2, 1, 0), (3, 1, 2)))


def test_pb_from_ssaf_places_rows_over_the_basement():
    f = enumerate_ssaf((1, 0, 2))[0]
    g = pb_from_ssaf(f, (3, 1, 2))
    assert validate_pb(g) and g.shape == (2, 1, 0)
    assert ssaf_from_pb(g) == f
    # identity basement and partition shape: nothing moves
    for h in enumerate_ssaf((2, 1, 0)):
        assert pb_from_ssaf(h, (1, 2, 3)) == h


def test_displayed_permuted_filling_round_trips():
    g = rho([(2, 3, 4), (1, 3), (1, 2)], (2, 4, 3, 1, 5))
    assert validate_pb(g)
    f = ssaf_from_pb(g)
    assert validate(f) and f.basement == (1, 2, 3, 4, 5)
    assert pb_from_ssaf(f, g.basement) == g


def test_super_filling_placed_over_any_basement():
    from skyline.ssaf import super_filling, rows_of
    lam = (3, 2, 0)
    for w in all_permutations(3):
        g = pb_from_ssaf(super_filling(lam), w)
        assert g.shape == lam and rows_of(g) == rows_of(super_filling(lam))


def test_validate_pb_rejects_composition_shapes():
    assert not validate_pb(SSAF(((1,), (), (3, 2))))
