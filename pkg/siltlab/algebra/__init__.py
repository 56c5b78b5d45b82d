from .based import (
    BasedAlgebra,
    cartan_matrix,
    idempotent_truncation,
    opposite,
    quotient_central,
    radical_power_zero,
)
from .field import kernel_basis, rank, rref
from .presentation import algebra_from_presentation
from .quiver import Arrow, Quiver, Relation, detect_tau_infinite_square

__all__ = [
    "algebra_from_presentation",
    "Arrow",
    "BasedAlgebra",
    "cartan_matrix",
    "detect_tau_infinite_square",
    "idempotent_truncation",
    "kernel_basis",
    "opposite",
    "quotient_central",
    "Quiver",
    "radical_power_zero",
    "rank",
    "Relation",
    "rref",
]
