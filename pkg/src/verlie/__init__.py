"""Contragredient Lie (super)algebras in characteristic p, exactly.

Builds the algebras attached to a matrix/parity datum over F_{p^k},
computes their Weyl-groupoid root systems, decomposes them as modules
over the Frobenius kernel of the additive group via an inner derivation,
and assembles the semisimplified Lie algebra in the Verlinde category.
"""

from .errors import VerlieError
from .exactfield import FieldContext, FieldElement, Matrix, kernel, make_field, solve
from .rootsystems import (ContragredientDatum, RootSystemBundle, StringPartition,
                          alpha_strings, cartan_matrix_of, datum_from_ints,
                          full_roots, odd_nondegenerate, parabolic_restrict,
                          positive_roots, reflect_datum, root_str, weyl_orbit)

__all__ = [
    "VerlieError", "FieldContext", "FieldElement", "Matrix", "kernel",
    "make_field", "solve", "ContragredientDatum", "RootSystemBundle",
    "StringPartition", "alpha_strings", "cartan_matrix_of", "datum_from_ints",
    "full_roots", "odd_nondegenerate", "parabolic_restrict", "positive_roots",
    "reflect_datum", "root_str", "weyl_orbit",
]
