"""Reidemeister torsion as a functor on 3-dimensional cobordisms."""

from .cobordism import (
    CobObject,
    Cylinder,
    HeegaardWord,
    KnotInput,
    LowerAlpha,
    LowerBeta,
    PresentedCobordism,
    UpperAlpha,
    UpperBeta,
    dual_word,
)
from .coeff import LaurentPoly, MonomialUnit, RatFunc, format_poly, parse_poly
from .duality import intersection_matrix, pair_wedge, verify_95, verify_duality
from .exterior import GradedMap, ProjectiveGradedMap, proj_eq
from .freegroup import AbelMap, FreeHom, fox_jacobian, parse_word
from .functor import (
    closed_torsion,
    eval_presented,
    eval_word,
    knot_alexander,
    knot_torsion,
    magnus_extract,
    reidemeister_function,
)
from .knots import knot_corpus, wirtinger

__all__ = [
    "AbelMap", "CobObject", "Cylinder", "FreeHom", "GradedMap", "HeegaardWord", "KnotInput",
    "LaurentPoly", "LowerAlpha", "LowerBeta", "MonomialUnit", "PresentedCobordism",
    "ProjectiveGradedMap", "RatFunc", "UpperAlpha", "UpperBeta", "closed_torsion", "dual_word",
    "eval_presented", "eval_word", "format_poly", "fox_jacobian", "intersection_matrix", "knot_alexander",
    "knot_corpus", "knot_torsion", "magnus_extract", "pair_wedge", "parse_poly", "parse_word", "proj_eq",
    "reidemeister_function", "verify_95", "verify_duality", "wirtinger",
]
