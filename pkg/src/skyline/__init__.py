"""Demazure atoms, key polynomials and right keys via skyline fillings."""

from .core import (
    all_permutations, apply_perm, bruhat_leq, conjugate, longest, perm_of_composition,
    reduced_word, sort_desc,
)
from .demazure import (
    atom_via_operators, atom_via_ssaf, atom_via_theta, enumerate_pb, key_poly_via_atoms,
    key_poly_via_operators, key_poly_via_pb, key_tableau, key_tableau_of_perm,
    pb_from_ssaf, right_key, ssaf_from_pb,
)
from .polynomial import Polynomial, apply_word, monomial_of, pi, pibar, theta
from .ssaf import SSAF, PermutedSSAF, e_poly, enumerate_ssaf, psi, rho, theta_cap
from .tableaux import SSYT, crystal_f, crystal_graph, enumerate_ssyt, key_of_composition, schur

__version__ = "0.1.0"

__all__ = [
    "Polynomial", "SSYT", "SSAF", "PermutedSSAF",
    "all_permutations", "apply_perm", "bruhat_leq", "conjugate", "longest",
    "perm_of_composition", "reduced_word", "sort_desc",
    "atom_via_operators", "atom_via_ssaf", "atom_via_theta", "enumerate_pb",
    "key_poly_via_atoms", "key_poly_via_operators", "key_poly_via_pb",
    "key_tableau", "key_tableau_of_perm", "pb_from_ssaf", "ssaf_from_pb", "right_key",
    "apply_word", "monomial_of", "pi", "pibar", "theta",
    "e_poly", "enumerate_ssaf", "psi", "rho", "theta_cap",
    "crystal_f", "crystal_graph", "enumerate_ssyt", "key_of_composition", "schur",
]
