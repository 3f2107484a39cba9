"""diagcomp: companion-type matrices with a prescribed diagonal.

Given a monic polynomial f over an exact field (arbitrary-precision
rationals or GF(p)) and diagonal entries summing to minus its subleading
coefficient, the package constructs the unique matrix with that diagonal,
unit subdiagonal and filled last column whose characteristic polynomial
is f, and verifies the construction through several independent routes.
"""

from .construct import (
    ConstructionResult,
    assemble,
    check_similarity,
    companion,
    construct_b,
    construct_full,
    derive_last_diagonal,
    similarity_T,
    similarity_defect,
    validate_diagonal,
)
from .errors import (
    BudgetExceeded,
    DiagcompError,
    DimensionMismatch,
    DivisionByZero,
    FieldMismatch,
    InvalidArgument,
    TraceMismatch,
    WrongField,
)
from .fields import RATIONALS, Field, FieldElement, PrimeField, Rationals, parse_field
from .matrices import DenseMatrix, DiagonalSpec, StructuredMatrix
from .oracles import (
    MinorEquation,
    MinorSystemReport,
    OccurrencePattern,
    charpoly_generic,
    charpoly_structured,
    check_minor_system,
    occurrence_pattern,
    principal_minor_sum,
    solve_b_backsub,
    uniqueness_exhaustive,
)
from .poly import MonicPoly, parse_poly, poly_equal
from .symfunc import h_eval, h_table

__version__ = "0.1.0"

__all__ = [
    "__version__",
    # fields
    "Field",
    "Rationals",
    "PrimeField",
    "FieldElement",
    "RATIONALS",
    "parse_field",
    # polynomials
    "MonicPoly",
    "poly_equal",
    "parse_poly",
    # symmetric sums
    "h_eval",
    "h_table",
    # matrices
    "DiagonalSpec",
    "StructuredMatrix",
    "DenseMatrix",
    # construction
    "derive_last_diagonal",
    "validate_diagonal",
    "construct_b",
    "assemble",
    "companion",
    "similarity_T",
    "similarity_defect",
    "check_similarity",
    "ConstructionResult",
    "construct_full",
    # oracles
    "charpoly_structured",
    "charpoly_generic",
    "principal_minor_sum",
    "MinorEquation",
    "MinorSystemReport",
    "check_minor_system",
    "solve_b_backsub",
    "uniqueness_exhaustive",
    "OccurrencePattern",
    "occurrence_pattern",
    # errors
    "DiagcompError",
    "FieldMismatch",
    "DivisionByZero",
    "InvalidArgument",
    "DimensionMismatch",
    "TraceMismatch",
    "BudgetExceeded",
    "WrongField",
]
