"""Exact commutative algebra for presentation matrices and graded resolutions."""

from .groebner import (
    Budget,
    BudgetExceeded,
    GradedResolution,
    IdealBasis,
    ModuleBasis,
    UnitIdealError,
    dimension,
    groebner_basis,
    height,
    hilbert_function,
    ideal_contains,
    ideal_equal,
    intersect,
    member,
    member_with_cofactors,
    minimal_free_resolution,
    minimal_generators,
    minimalize,
    module_contains,
    module_member,
    normal_form,
    quotient,
    syzygies,
    vector_degree,
)
from .matrices import (
    DegreeMatrix,
    PolyMatrix,
    check_graded,
    cofactor_matrix,
    degree_matrix,
    det,
    minor,
    pfaffian,
    pfaffians,
    rank,
)
from .betti import (
    ESSENTIAL,
    KNOWN_ESSENTIAL_EXCEPTIONS,
    MINIMAL,
    NOT_ESSENTIAL,
    NOT_MINIMAL,
    UNKNOWN,
    BettiSequence,
    Verdict,
    classify,
    classify_gaeta_reduce,
    classify_homogeneous,
    classify_n3,
    hilbert_from_betti,
    is_gaeta,
    is_minimal_sequence,
    lift,
    recover_from_degree_matrix,
)
from .construct import (
    BidiagonalMatrix,
    HilbertBurchData,
    base_bidiagonal,
    hilbert_burch_ideal,
    homogeneous_matrix,
    homogeneous_plan,
    lift_matrix,
    nogaeta_extend,
    prop_bet,
    star_product,
)
from .presentation import (
    DecompositionReport,
    ExactnessReport,
    GammaVector,
    PresentationReport,
    ZetaReport,
    build_resolution,
    check_presentation,
    check_presentation_rect,
    column_module,
    decompose,
    gamma,
    verify_exactness,
    zeta,
)
from .ring import NEG_INF, ParseError, Polynomial, RingContext, embed, gcd, parse, render

__all__ = [
    "ESSENTIAL",
    "KNOWN_ESSENTIAL_EXCEPTIONS",
    "MINIMAL",
    "NEG_INF",
    "NOT_ESSENTIAL",
    "NOT_MINIMAL",
    "UNKNOWN",
    "BettiSequence",
    "BidiagonalMatrix",
    "Budget",
    "BudgetExceeded",
    "DecompositionReport",
    "DegreeMatrix",
    "ExactnessReport",
    "GammaVector",
    "GradedResolution",
    "HilbertBurchData",
    "IdealBasis",
    "ModuleBasis",
    "ParseError",
    "PolyMatrix",
    "Polynomial",
    "PresentationReport",
    "RingContext",
    "UnitIdealError",
    "Verdict",
    "ZetaReport",
    "base_bidiagonal",
    "build_resolution",
    "check_graded",
    "check_presentation",
    "check_presentation_rect",
    "classify",
    "classify_gaeta_reduce",
    "classify_homogeneous",
    "classify_n3",
    "cofactor_matrix",
    "column_module",
    "decompose",
    "degree_matrix",
    "det",
    "dimension",
    "embed",
    "gamma",
    "gcd",
    "groebner_basis",
    "height",
    "hilbert_burch_ideal",
    "hilbert_from_betti",
    "hilbert_function",
    "homogeneous_matrix",
    "homogeneous_plan",
    "ideal_contains",
    "ideal_equal",
    "intersect",
    "is_gaeta",
    "is_minimal_sequence",
    "lift",
    "lift_matrix",
    "member",
    "member_with_cofactors",
    "minimal_free_resolution",
    "minimal_generators",
    "minimalize",
    "minor",
    "module_contains",
    "module_member",
    "nogaeta_extend",
    "normal_form",
    "parse",
    "pfaffian",
    "pfaffians",
    "prop_bet",
    "quotient",
    "rank",
    "recover_from_degree_matrix",
    "render",
    "star_product",
    "syzygies",
    "vector_degree",
]
