"""Orthogonal C- and S-polynomials of the compact simple Lie groups.

Weyl-orbit sums of exponentials decompose multiplicatively, which turns the
orbit functions of an algebra of rank n into two families of orthogonal
polynomials in n variables (the rank-1 case gives the classical Chebyshev
polynomials of the first and second kind).  This package builds the root
system data exactly, decomposes orbit products, generates the polynomials
and recurrences, and verifies everything numerically.
"""

from .rootsys import (
    AlgebraId,
    RootSystem,
    build_root_system,
    congruence_number,
    fundamental_region,
    reflect,
    to_dominant,
)
from .orbits import Orbit, orbit_size, weyl_orbit
from .orbitalg import cc_product, cs_product, derive_recursion, ss_product
from .polyring import MonomialOrder, Polynomial
from .multiplicities import dim_irrep, kostka_inverse, weight_multiplicities
from .genpoly import (
    PolyTable,
    c_polynomial,
    char_variable_polynomial,
    character_polynomial,
    inverse_character,
    s_polynomial,
)
from .numeval import (
    EvalContext,
    cosine_form,
    eval_orbit_function,
    laurent_form,
    orthogonality_integral,
    verify_substitution,
)
from .kernels import BACKEND as KERNEL_BACKEND

__version__ = "0.1.0"

__all__ = [
    "AlgebraId", "RootSystem", "build_root_system", "congruence_number",
    "fundamental_region", "reflect", "to_dominant",
    "Orbit", "orbit_size", "weyl_orbit",
    "cc_product", "cs_product", "ss_product", "derive_recursion",
    "MonomialOrder", "Polynomial",
    "dim_irrep", "kostka_inverse", "weight_multiplicities",
    "PolyTable", "c_polynomial", "char_variable_polynomial",
    "character_polynomial", "inverse_character", "s_polynomial",
    "EvalContext", "cosine_form", "eval_orbit_function", "laurent_form",
    "orthogonality_integral", "verify_substitution",
    "KERNEL_BACKEND",
]
