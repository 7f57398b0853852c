"""Acceptance criteria 1-8, each at its stated range and time budget.

Every test records one PASS/FAIL line (see ``conftest.py``) before asserting.
"""

import time

from skyline import verify
from skyline.core import longest, perm_of_composition
from skyline.demazure import (
    enumerate_pb, key_poly_via_operators, key_poly_via_pb, key_tableau_of_perm, right_key,
)
from skyline.polynomial import apply_word, monomial_of, pi, pibar, theta
from skyline.ssaf import psi
from skyline.tableaux import (
    SSYT, col_word, colform, crystal_graph, enumerate_ssyt, from_columns, key_of_composition,
    knuth_class, right_key_oracle,
)


def _sweep(report, number, title, check, budget=None):
    start = time.perf_counter()
    res = check()
    elapsed = time.perf_counter() - start
    ok = res.passed and (budget is None or elapsed < budget)
    detail = f"{res.cases} cases, {elapsed:.1f}s" + (f" of {budget}s" if budget else "")
    if res.counterexample:
        detail += f"; counterexample {res.counterexample}"
    report(number, title, ok, detail)
    assert res.passed, res.counterexample
    if budget is not None:
        assert elapsed < budget, f"{elapsed:.1f}s exceeds {budget}s"


def test_criterion_1_atoms(criterion_report):
    _sweep(criterion_report, 1, "atoms: operators = exchange operators = fillings, n<=5, |lam|<=8",
           lambda: verify.check_atoms(5, 8), budget=120)


def test_criterion_2_key_polynomials(criterion_report):
    _sweep(criterion_report, 2, "key polynomials: operators = atoms = permuted basements, n<=5, |lam|<=8",
           lambda: verify.check_key_polynomials(5, 8), budget=180)


def test_criterion_3_right_key_oracle(criterion_report):
    _sweep(criterion_report, 3, "right key = Knuth-class oracle, |lam|<=6, entries<=4",
           lambda: verify.check_right_keys(6, 4, cap=100_000), budget=120)


def test_criterion_4_crystal_commutes(criterion_report):
    _sweep(criterion_report, 4, "psi(f_i T) = Theta_i(psi T), |lam|<=7, n<=5",
           lambda: verify.check_crystal_commutes(5, 7), budget=60)


def test_criterion_5_lowering_shapes(criterion_report):
    _sweep(criterion_report, 5, "shape of Theta_i(F) is gamma or s_i gamma, |gamma|<=7, n<=5",
           lambda: verify.check_lowering_shapes(5, 7))


def test_criterion_6_schur(criterion_report):
    _sweep(criterion_report, 6, "atoms over rearrangements and key of w0 give s_lam, n<=5, |lam|<=8",
           lambda: verify.check_schur(5, 8))


def _x(*e):
    return monomial_of(e)


def _goldens():
    x = _x
    s_tab = from_columns([(1, 2, 3, 5), (2, 4)])
    fig5 = SSYT(((1, 2, 2, 3), (2, 3, 3, 6), (4, 5)))
    g = crystal_graph((2, 1), 3)
    graph_edges = {(g.nodes[a].label(), g.nodes[b].label(), i) for a, b, i in g.edges}
    return {
        "pi_1 pi_2 on x1^2 x2": apply_word(x(2, 1, 0), (1, 2), "pi")
        == x(2, 1, 0) + x(2, 0, 1) + x(1, 2, 0) + x(1, 1, 1) + x(0, 2, 1),
        "pi_2 on x1^2 x2": pi(x(2, 1, 0), 2) == x(2, 1, 0) + x(2, 0, 1),
        "pi_1 on x1^2 x2": pi(x(2, 1, 0), 1) == x(2, 1, 0) + x(1, 2, 0),
        "pibar_1 on x1^2 x2 x3": pibar(x(2, 1, 1), 1) == x(1, 2, 1),
        "theta_2 on x1^3 x2^4 x3 x5 x7^3": theta(x(3, 4, 1, 0, 1, 0, 3), 2)
        == x(3, 3, 2, 0, 1, 0, 3) + x(3, 2, 3, 0, 1, 0, 3) + x(3, 1, 4, 0, 1, 0, 3),
        "key(2,1,1,4,0,3)": col_word(key_of_composition((2, 1, 1, 4, 0, 3)))
        == (6, 4, 3, 2, 1, 6, 4, 1, 6, 4, 4),
        "colforms": colform((3, 5, 4, 2, 2, 1)) == (1, 3, 2) and colform((4, 2, 5, 3, 2, 1)) == (2, 4),
        "Knuth equivalences": (3, 5, 4, 2, 2, 1) in knuth_class(col_word(s_tab))
        and (4, 2, 5, 3, 2, 1) in knuth_class((4, 3, 2, 1, 5, 2)),
        "right key 5421.42": col_word(right_key(s_tab)) == (5, 4, 2, 1, 4, 2)
        and col_word(right_key_oracle(s_tab)) == (5, 4, 2, 1, 4, 2),
        "K(241635) heights 4,2,2,1": col_word(key_tableau_of_perm((2, 4, 1, 6, 3, 5), (4, 2, 2, 1)))
        == (6, 4, 2, 1, 4, 2, 4, 2, 2),
        "crystal graph (2,1)": len(g.nodes) == 8 and graph_edges == {
            ("1,1/2", "1,2/2", 1), ("1,1/2", "1,1/3", 2), ("1,2/2", "1,3/2", 2),
            ("1,1/3", "1,2/3", 1), ("1,2/3", "2,2/3", 1), ("1,3/2", "1,3/3", 2),
            ("2,2/3", "2,3/3", 2), ("1,3/3", "2,3/3", 1)},
        "tau": perm_of_composition((1, 0, 3, 3, 0, 1, 2, 0)) == (3, 4, 7, 1, 6, 2, 5, 8),
        "insertion pipeline": psi(fig5, 6).shape == (0, 2, 4, 0, 0, 4)
        and right_key(fig5, 6) == SSYT(((2, 2, 3, 3), (3, 3, 6, 6), (6, 6))),
        "kappa over 312": key_poly_via_pb((2, 1, 0), (3, 1, 2))
        == key_poly_via_operators((3, 1, 2), (2, 1, 0))
        == x(2, 1, 0) + x(1, 2, 0) + x(2, 0, 1) + x(1, 1, 1) + x(1, 0, 2),
        "five fillings over 312": sorted(f.columns for f in enumerate_pb((2, 1, 0), (3, 1, 2)))
        == [((2, 1), (1,), ()), ((2, 2), (1,), ()), ((3, 1), (1,), ()),
            ((3, 2), (1,), ()), ((3, 3), (1,), ())],
    }


def test_criterion_7_goldens(criterion_report):
    start = time.perf_counter()
    results = _goldens()
    elapsed = time.perf_counter() - start
    failed = [k for k, ok in results.items() if not ok]
    ok = not failed and elapsed < 10
    criterion_report(7, "worked examples reproduce exactly", ok,
                     f"{len(results)} examples, {elapsed:.2f}s of 10s" + (f"; failed {failed}" if failed else ""))
    assert not failed
    assert elapsed < 10


def test_criterion_8_bijection(criterion_report):
    _sweep(criterion_report, 8, "permuted-basement counts and round trips, n<=4, |lam|<=6",
           lambda: verify.check_pb_bijection(4, 6))


def test_longest_element_count_matches_tableaux():
    # the first half of criterion 8, stated directly
    assert len(enumerate_pb((3, 2, 1, 0), longest(4))) == len(enumerate_ssyt((3, 2, 1), 4))
