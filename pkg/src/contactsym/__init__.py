"""Exact symbol calculus for polynomial symbols on the standard contact space.

Symbols are polynomials in ``(q, p, t, xi)`` with rational coefficients,
tagged with a density weight.  The package provides the contraction
``i(alpha)``, the extended Hamiltonian ``X``, their ``sl(2)`` companion
``H``, projectors and sections adapted to ``ker i(alpha)``, and suites that
check every identity exactly on seeded random symbols.
"""

from .contact import (
    AlgebraBasis,
    ContactForm,
    alpha_coefficients,
    contact_field,
    hamiltonian_density,
    is_contact,
    lagrange_bracket,
    sl_generators,
    sp_generators,
)
from .decomposition import (
    DecompositionResult,
    SingularWeightError,
    coeff_b,
    coeff_c,
    decompose,
    filtration_level,
    graded_inverse_check,
    projector_p,
    reconstruct,
    section_s,
    singular_set,
)
from .exactpoly import DimensionError, DomainError, Poly, Rational
from .operators import LinearOperator, StructureConstants, big_X, i_alpha, op_H
from .sampling import random_symbol
from .suites import Report, SuiteConfig, run_suite
from .symbolfile import SymbolParseError, parse_symbol, parse_symbols, serialize_symbol
from .symbols import (
    GradingError,
    PolyVectorField,
    Symbol,
    from_R_grading,
    lie_derivative_density,
    lie_derivative_symbol,
    to_R_grading,
)

__all__ = [name for name in dir() if not name.startswith("_")]
