"""Exact Minkowski-sum face counting."""
from .errors import (ClaimViolation, DegenerateCoincidence, GeneralOrientationRequired,
                     MinkcountError, NotFullDimensional, NotGeneralOrientation, PoleCell)
from .polytope import Polytope, normalize, support_face
from .minkowski import SumInstance, minkowski_sum, partial_sum, decompose_face
from .formulas import lemma6_sum, verify_theorem1, corollary_bound, vertex_bounds
from .generators import GenSpec, generate

__version__ = "0.1.0"

__all__ = [
    "ClaimViolation", "DegenerateCoincidence", "GeneralOrientationRequired", "MinkcountError",
    "NotFullDimensional", "NotGeneralOrientation", "PoleCell",
    "Polytope", "normalize", "support_face",
    "SumInstance", "minkowski_sum", "partial_sum", "decompose_face",
    "lemma6_sum", "verify_theorem1", "corollary_bound", "vertex_bounds",
    "GenSpec", "generate",
]
