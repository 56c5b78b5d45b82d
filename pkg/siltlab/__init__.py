from siltlab._version import __version__
from siltlab.algebra import BasedAlgebra, Quiver, Relation, algebra_from_presentation
from siltlab.catalog import get as get_algebra
from siltlab.errors import SiltlabError
from siltlab.schur import classify, schur2_blocks
from siltlab.silting import (
    EnumerationResult,
    Explorer,
    enumerate_silting,
    sign_decomposition_report,
    verify_algebra,
)

__all__ = [
    "__version__",
    "algebra_from_presentation",
    "BasedAlgebra",
    "classify",
    "enumerate_silting",
    "EnumerationResult",
    "Explorer",
    "get_algebra",
    "Quiver",
    "Relation",
    "schur2_blocks",
    "sign_decomposition_report",
    "SiltlabError",
    "verify_algebra",
]
