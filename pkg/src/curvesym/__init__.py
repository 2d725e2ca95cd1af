"""Exact symmetry detection for rational plane and space curves.

A symmetry ``f(x) = Q x + t`` of a properly parametrized curve ``x(t)``
comes with a Möbius map ``phi`` such that ``f(x(t)) = x(phi(t))``.  Writing
``phi`` with one free parameter ``b`` per branch turns the search into
finding the real roots of a univariate gcd; every root is then verified
exactly.
"""

from .classify import SymmetryElement, classify, dedupe, fixed_elements, rotation_angle_data
from .closure import ClosureOverflowError, ComposedSymmetry, group_closure
from .curve import (
    CurveSpec,
    DegenerateCurveError,
    GeneralPositionError,
    MoebiusMap,
    general_position_conditions,
    general_position_reparam,
    is_degenerate,
    moebius_order,
    ph_sigma,
    properness_check,
)
from .detect import (
    DetectOptions,
    ImproperCurveError,
    SymmetryReport,
    VerificationError,
    VerifiedSymmetry,
    detect_all,
)

__version__ = "0.1.0"

__all__ = [
    "ClosureOverflowError", "ComposedSymmetry", "CurveSpec", "DegenerateCurveError",
    "DetectOptions", "GeneralPositionError", "ImproperCurveError", "MoebiusMap",
    "SymmetryElement", "SymmetryReport", "VerificationError", "VerifiedSymmetry", "classify",
    "dedupe", "detect_all", "fixed_elements", "general_position_conditions",
    "general_position_reparam", "group_closure", "is_degenerate", "moebius_order", "ph_sigma",
    "properness_check", "rotation_angle_data",
]
