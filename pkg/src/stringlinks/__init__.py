"""Exact invariants of string links from Morse-word diagrams.

The package computes colored Gassner and one-variable Burau matrices
over exact Laurent-polynomial arithmetic, together with the Alexander
invariants of closures, string-link torsion, a random-walk oracle for
the same matrices, strand twisting, unitarity spectra, and truncated
Taylor expansions for finite-type coefficients.
"""

from .algebra import (
    AlgebraError,
    LaurentPoly,
    PoleError,
    RatFunc,
    RatMatrix,
    ShapeError,
    TruncatedSeries,
    VerificationError,
    default_var_names,
    det,
    normalize_unit,
    parse_poly,
    parse_ratfunc,
    rank,
    solve,
    taylor_expand,
)
from .diagram import (
    Cap,
    CrossNeg,
    CrossPos,
    CupL,
    CupR,
    Diagram,
    MorseError,
    MorseWord,
    add_kink,
    add_twist,
    flip_crossing,
    from_braid_word,
    invert,
    parse_braid_line,
    parse_morse,
    stack,
    to_dsl,
    trace,
)
from .wirtinger import FoxMatrix, fox_matrix, presentation
from .gassner import (
    GassnerMatrix,
    InvariantForm,
    ReducedMatrix,
    UnitaryReport,
    burau,
    charpoly_coefficients,
    default_angles,
    fixes_weight_vectors,
    fox_of_word,
    full_twist,
    full_twist_braid_word,
    gassner,
    invariant_form,
    matrix_from_json,
    matrix_to_json,
    numeric_eval,
    reduce,
    unitary_spectrum_check,
    weight_column,
    weight_row,
)
from .walks import solve_labeling, twist_formula, walk_matrix
from .alexander import (
    AlexReport,
    ClosureMatrix,
    KnotClosureCheck,
    alexander_function,
    alexander_poly_closure,
    closure_matrix,
    equal_up_to_units,
    factorization_identity,
    full_report,
    ideal_rank_check,
    knot_closure_relation,
    torsion,
)
from .finitetype import SeriesMatrix, alternating_sum, taylor_gassner

__version__ = "0.1.0"

__all__ = [
    "AlgebraError",
    "AlexReport",
    "Cap",
    "ClosureMatrix",
    "CrossNeg",
    "CrossPos",
    "CupL",
    "CupR",
    "Diagram",
    "FoxMatrix",
    "GassnerMatrix",
    "InvariantForm",
    "KnotClosureCheck",
    "LaurentPoly",
    "MorseError",
    "MorseWord",
    "PoleError",
    "RatFunc",
    "RatMatrix",
    "ReducedMatrix",
    "SeriesMatrix",
    "ShapeError",
    "TruncatedSeries",
    "UnitaryReport",
    "VerificationError",
    "add_kink",
    "add_twist",
    "alexander_function",
    "alexander_poly_closure",
    "alternating_sum",
    "burau",
    "charpoly_coefficients",
    "closure_matrix",
    "default_angles",
    "default_var_names",
    "det",
    "equal_up_to_units",
    "factorization_identity",
    "fixes_weight_vectors",
    "flip_crossing",
    "fox_matrix",
    "fox_of_word",
    "from_braid_word",
    "full_report",
    "full_twist",
    "full_twist_braid_word",
    "gassner",
    "ideal_rank_check",
    "invariant_form",
    "invert",
    "knot_closure_relation",
    "matrix_from_json",
    "matrix_to_json",
    "normalize_unit",
    "numeric_eval",
    "parse_braid_line",
    "parse_morse",
    "parse_poly",
    "parse_ratfunc",
    "presentation",
    "rank",
    "reduce",
    "solve",
    "solve_labeling",
    "stack",
    "taylor_expand",
    "taylor_gassner",
    "to_dsl",
    "torsion",
    "trace",
    "twist_formula",
    "unitary_spectrum_check",
    "walk_matrix",
    "weight_column",
    "weight_row",
]
