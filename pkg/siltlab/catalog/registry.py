"""Registry of named algebras.

Fixed algebras are shipped as presentation files next to this module;
families parameterized by ``m`` are generated in :mod:`siltlab.catalog.families`.
Names accept an ``m`` suffix after a colon: ``D:6``, ``A:3``.
"""

from __future__ import annotations

from collections.abc import Callable
from dataclasses import dataclass
from math import comb
from pathlib import Path

from siltlab.algebra.based import BasedAlgebra
from siltlab.algebra.fileformat import build_algebra, load_definition
from siltlab.algebra.presentation import algebra_from_presentation
from siltlab.catalog import families
from siltlab.errors import BadParameter, UnknownAlgebra
from siltlab.models.schemas import AlgebraDefinition

# Two-term silting counts of D_3 .. D_10.
D_COUNTS: dict[int, int] = {
    3: 28,
    4: 114,
    5: 456,
    6: 1816,
    7: 4012,
    8: 13238,
    9: 45238,
    10: 151568,
}


def _unknown(m: int | None) -> int | None:
    return None


@dataclass
class CatalogEntry:
    """One named algebra or algebra family."""

    name: str
    description: str
    default_p: int = 2
    presentation_file: str | None = None
    family: Callable[[int], families.Presentation] | None = None
    min_m: int | None = None
    default_m: int | None = None
    counts: Callable[[int | None], int | None] = _unknown
    expected_complete: bool = True

    @property
    def parameterized(self) -> bool:
        return self.family is not None or self.min_m is not None

    def expected_count(self, m: int | None = None) -> int | None:
        return self.counts(m)


def _fixed(count: int | None) -> Callable[[int | None], int | None]:
    return lambda m: count


CATALOG: dict[str, CatalogEntry] = {
    "F": CatalogEntry(
        name="F",
        description="The ground field",
        presentation_file="field.yaml",
        counts=_fixed(2),
    ),
    "example23": CatalogEntry(
        name="example23",
        description="1 <-> 2 with both composites zero",
        presentation_file="example23.yaml",
        counts=_fixed(6),
    ),
    "pathA3": CatalogEntry(
        name="pathA3",
        description="Path algebra of 1 <- 2 -> 3",
        presentation_file="pathA3.yaml",
        counts=_fixed(14),
    ),
    "muJ_pathA3": CatalogEntry(
        name="muJ_pathA3",
        description="Path algebra of 1 -> 2 <- 3 (pathA3 mutated at 1 and 3)",
        presentation_file="muJ_pathA3.yaml",
        counts=_fixed(14),
    ),
    "A": CatalogEntry(
        name="A",
        description="A_m: double arrows on a line, blocks of S(2,r)",
        family=families.a_family,
        min_m=2,
        default_m=2,
        counts=lambda m: comb(2 * m, m) if m else None,
    ),
    "D": CatalogEntry(
        name="D",
        description="D_m: two vertices joined to a chain, blocks of S(2,r)",
        family=families.d_family,
        min_m=3,
        default_m=3,
        counts=lambda m: D_COUNTS.get(m) if m else None,
    ),
    "Dprime": CatalogEntry(
        name="Dprime",
        description="D'_m: D_m modulo central elements, same two-term count",
        min_m=3,
        default_m=3,
        counts=lambda m: D_COUNTS.get(m) if m else None,
    ),
    "B": CatalogEntry(
        name="B",
        description="B_m: symmetric algebra on the quiver of D_m",
        family=families.b_family,
        min_m=3,
        default_m=3,
        counts=lambda m: 32 if m == 3 else None,
    ),
    "muJB": CatalogEntry(
        name="muJB",
        description="B_m tilted at its odd vertices >= 3, radical cube zero",
        family=families.muj_b_family,
        min_m=3,
        default_m=3,
    ),
    "K4": CatalogEntry(
        name="K4",
        description="Block of S(2,6) over p=2",
        presentation_file="K4.yaml",
        counts=_fixed(136),
    ),
    "M4": CatalogEntry(
        name="M4",
        description="Basic algebra of S(3,4) over p=2",
        presentation_file="M4.yaml",
        counts=_fixed(152),
    ),
    "L5": CatalogEntry(
        name="L5",
        description="Basic algebra of S(2,8) over p=2",
        presentation_file="L5.yaml",
        counts=_fixed(1656),
    ),
    "N5": CatalogEntry(
        name="N5",
        description="Tau-tilting infinite block of S(5,5) over p=2",
        presentation_file="N5.yaml",
        expected_complete=False,
    ),
    "gentleN5": CatalogEntry(
        name="gentleN5",
        description="Gentle quotient of a truncation of N5, tau-tilting infinite",
        presentation_file="gentleN5.yaml",
        expected_complete=False,
    ),
    "U4": CatalogEntry(
        name="U4",
        description="Basic algebra of S(3,5) over p=2",
        presentation_file="U4.yaml",
        counts=_fixed(136),
    ),
    "R4": CatalogEntry(
        name="R4",
        description="Block of S(3,7) over p=3",
        default_p=3,
        presentation_file="R4.yaml",
        counts=_fixed(88),
    ),
    "H4": CatalogEntry(
        name="H4",
        description="Block of S(3,8) over p=3",
        default_p=3,
        presentation_file="H4.yaml",
        counts=_fixed(96),
    ),
}

ALIASES = {"twocycle": "example23", "field": "F"}


def get_presentations_dir() -> Path:
    """Get the path to the shipped presentation files."""
    return Path(__file__).parent / "presentations"


def list_entries() -> list[dict[str, str]]:
    """List all catalog entries with their descriptions.

    Returns:
        List of dicts with 'id', 'description' and 'params' keys.
    """
    return [
        {
            "id": key,
            "description": entry.description,
            "params": f"m >= {entry.min_m}" if entry.parameterized else "",
        }
        for key, entry in CATALOG.items()
    ]


def get_entry(name: str) -> CatalogEntry:
    """Look up an entry by name or alias.

    Raises:
        UnknownAlgebra: If the name is not registered.
    """
    key = ALIASES.get(name, name)
    if key not in CATALOG:
        available = ", ".join(CATALOG.keys())
        raise UnknownAlgebra(f"Unknown algebra '{name}'. Available: {available}")
    return CATALOG[key]


def parse_name(spec: str) -> tuple[str, int | None]:
    """``"D:6"`` -> ``("D", 6)``; ``"K4"`` -> ``("K4", None)``."""
    name, sep, param = spec.partition(":")
    if not sep:
        return name, None
    try:
        return name, int(param)
    except ValueError as exc:
        raise BadParameter(f"Parameter in '{spec}' is not an integer") from exc


def display_name(entry: CatalogEntry, m: int | None) -> str:
    return f"{entry.name}{m}" if entry.parameterized else entry.name


def _resolve_m(entry: CatalogEntry, m: int | None) -> int | None:
    if not entry.parameterized:
        if m is not None:
            raise BadParameter(f"{entry.name} takes no parameter")
        return None
    m = entry.default_m if m is None else m
    assert entry.min_m is not None and m is not None
    if m < entry.min_m:
        raise BadParameter(f"{entry.name} needs m >= {entry.min_m}, got {m}")
    return m


def definition(
    name: str, m: int | None = None, p: int | None = None
) -> AlgebraDefinition:
    """The presentation of an entry in the algebra file format."""
    entry = get_entry(name)
    m = _resolve_m(entry, m)
    p = entry.default_p if p is None else p
    if entry.presentation_file is not None:
        defn = load_definition(get_presentations_dir() / entry.presentation_file)
        return defn.model_copy(update={"p": p})
    family = entry.family
    if entry.name == "Dprime":
        family = families.dprime_family
    assert family is not None and m is not None
    quiver, relations = family(m)
    return AlgebraDefinition.from_presentation(
        quiver, relations, p, name=display_name(entry, m)
    )


def get(name: str, p: int | None = None, m: int | None = None) -> BasedAlgebra:
    """Build a catalog algebra over ``F_p``.

    Raises:
        UnknownAlgebra: If the name is not registered.
        BadParameter: If ``m`` is out of range or given to a fixed algebra.
    """
    entry = get_entry(name)
    m = _resolve_m(entry, m)
    p = entry.default_p if p is None else p
    label = display_name(entry, m)
    if entry.presentation_file is not None:
        defn = load_definition(get_presentations_dir() / entry.presentation_file)
        return build_algebra(defn, p)
    assert m is not None
    if entry.name == "Dprime":
        return families.dprime_algebra(m, p, name=label)
    assert entry.family is not None
    quiver, relations = entry.family(m)
    return algebra_from_presentation(quiver, relations, p, name=label)


def get_by_spec(spec: str, p: int | None = None) -> BasedAlgebra:
    """Build from a ``name[:m]`` string."""
    name, m = parse_name(spec)
    return get(name, p, m)
