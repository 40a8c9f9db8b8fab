"""Superirreducibility of polynomials over finite fields.

A polynomial f is weakly k-superirreducible when f(g(t)) stays
irreducible for every substitution g of degree exactly k.  This package
decides that property, counts the monic weakly 2-superirreducible
polynomials of given degree by three independent methods, and verifies
the character-sum bounds the counts obey, all in exact arithmetic.
"""

from .config import BudgetError, CeilingError
from .fields import (
    FieldElement,
    FieldTower,
    build_tower,
    embed_base,
    enumerate_elements,
    frobenius,
    in_subfield,
    is_prime,
    prime_power,
    quadratic_character,
    root_tower,
    tower_for_q,
)
from .polys import (
    ZZ,
    FactorDegreeMultiset,
    Polynomial,
    compose,
    distinct_degree_factorization,
    enumerate_monic,
    enumerate_monic_irreducible,
    factor_degree_multiset,
    frobenius_powmod,
    is_irreducible,
    parse_poly,
    poly_gcd,
    squarefree_decomposition,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
