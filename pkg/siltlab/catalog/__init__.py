"""Named algebras: fixed presentations and parameterized families."""

from siltlab.catalog.registry import (
    CATALOG,
    CatalogEntry,
    definition,
    get,
    get_by_spec,
    get_entry,
    get_presentations_dir,
    list_entries,
    parse_name,
)

__all__ = [
    "CATALOG",
    "CatalogEntry",
    "definition",
    "get",
    "get_by_spec",
    "get_entry",
    "get_presentations_dir",
    "list_entries",
    "parse_name",
]
