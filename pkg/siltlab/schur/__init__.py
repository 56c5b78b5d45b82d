from .appendix import appendix_rows, format_appendix
from .cache import CountCache
from .classify import BlockCounter, classify, representation_type, schur2_blocks
from .quiver import arrow_count, schur2_quiver

__all__ = [
    "appendix_rows",
    "arrow_count",
    "BlockCounter",
    "classify",
    "CountCache",
    "format_appendix",
    "representation_type",
    "schur2_blocks",
    "schur2_quiver",
]
