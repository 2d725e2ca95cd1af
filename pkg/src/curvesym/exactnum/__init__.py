"""Exact arithmetic: rational polynomials, rational functions, real algebraic numbers."""

from .algvalue import AlgValue
from .parampoly import ParamPolynomial
from .polynomial import (
    ONE,
    T,
    ZERO,
    Polynomial,
    content_gcd,
    poly_gcd,
    poly_sqrt,
    remove_factors,
    square_decompose,
    squarefree_part,
)
from .ratfunc import RationalFunction
from .realroots import (
    EndpointRootError,
    Interval,
    RealAlgebraic,
    interval_eval,
    isolate_real_roots,
    refine_root,
    root_bound,
    sign_at,
    sturm_count,
    sturm_sequence,
    vanishes_at,
)

__all__ = [
    "AlgValue", "EndpointRootError", "Interval", "ONE", "ParamPolynomial",
    "Polynomial", "RationalFunction", "RealAlgebraic", "T", "ZERO",
    "content_gcd", "interval_eval", "isolate_real_roots", "poly_gcd",
    "poly_sqrt", "refine_root", "remove_factors", "root_bound", "sign_at",
    "square_decompose", "squarefree_part", "sturm_count", "sturm_sequence",
    "vanishes_at",
]
