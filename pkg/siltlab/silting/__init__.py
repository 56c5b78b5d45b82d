from .complexes import TwoTermComplex
from .explorer import EnumerationResult, Explorer, enumerate_silting
from .mutation import SiltingObject, left_mutation
from .signs import (
    build_A_epsilon,
    count_in_orthants,
    negative_orthant_families,
    sign_decomposition_report,
    verify_tilting_bijection,
)
from .verify import VerificationReport, verify_algebra

__all__ = [
    "build_A_epsilon",
    "count_in_orthants",
    "enumerate_silting",
    "EnumerationResult",
    "Explorer",
    "left_mutation",
    "negative_orthant_families",
    "sign_decomposition_report",
    "SiltingObject",
    "TwoTermComplex",
    "VerificationReport",
    "verify_algebra",
    "verify_tilting_bijection",
]
