"""Exact eigenstructure extraction and witness construction over the rationals."""

from .fixtures import FIXTURES, Fixture, get_fixture, q_sequence, r_sequence, s_sequence
from .poly import LAMBDA, RationalPoly, RationalPolyMatrix, poly_gcd
from .smith import SmithForm, smith_form
from .structure import LEFT, RIGHT, eigenstructure_of, irreducible_factors, minimal_indices
from .witness import companion_pencil, diagonal_witness, kcf_witness, poly_witness, resolve_values

__all__ = [
    "FIXTURES",
    "Fixture",
    "LAMBDA",
    "LEFT",
    "RIGHT",
    "RationalPoly",
    "RationalPolyMatrix",
    "SmithForm",
    "companion_pencil",
    "diagonal_witness",
    "eigenstructure_of",
    "get_fixture",
    "irreducible_factors",
    "kcf_witness",
    "minimal_indices",
    "poly_gcd",
    "poly_witness",
    "q_sequence",
    "r_sequence",
    "resolve_values",
    "s_sequence",
    "smith_form",
]
