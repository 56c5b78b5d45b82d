from .schemas import (
    AlgebraDefinition,
    AppendixRow,
    BijectionReport,
    BlockReport,
    Classification,
    EnumerationReport,
    SchurBlockReport,
    SearchConfig,
    SignDecompositionReport,
)

__all__ = [
    "AlgebraDefinition",
    "AppendixRow",
    "BijectionReport",
    "BlockReport",
    "Classification",
    "EnumerationReport",
    "SchurBlockReport",
    "SearchConfig",
    "SignDecompositionReport",
]
