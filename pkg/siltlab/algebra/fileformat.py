"""Reading and writing algebra definition files (JSON or YAML)."""

from __future__ import annotations

import json
from pathlib import Path

import yaml

from siltlab.algebra.based import BasedAlgebra
from siltlab.algebra.presentation import DEFAULT_LENGTH_CAP, algebra_from_presentation
from siltlab.models.schemas import AlgebraDefinition

_YAML_SUFFIXES = {".yaml", ".yml"}


def parse_definition(text: str, fmt: str = "json") -> AlgebraDefinition:
    """Parse and validate a definition from a JSON or YAML string."""
    data = yaml.safe_load(text) if fmt == "yaml" else json.loads(text)
    return AlgebraDefinition.model_validate(data)


def load_definition(path: Path) -> AlgebraDefinition:
    path = Path(path)
    fmt = "yaml" if path.suffix.lower() in _YAML_SUFFIXES else "json"
    return parse_definition(path.read_text(encoding="utf-8"), fmt)


def dump_definition(defn: AlgebraDefinition, fmt: str = "json") -> str:
    data = defn.model_dump(by_alias=True, exclude_none=True)
    if fmt == "yaml":
        return yaml.safe_dump(data, sort_keys=False, allow_unicode=True)
    return json.dumps(data, indent=2, ensure_ascii=False) + "\n"


def build_algebra(
    defn: AlgebraDefinition,
    p: int | None = None,
    length_cap: int = DEFAULT_LENGTH_CAP,
) -> BasedAlgebra:
    """Construct the algebra of a definition, optionally over another prime."""
    return algebra_from_presentation(
        defn.to_quiver(),
        defn.to_relations(),
        p if p is not None else defn.p,
        length_cap=length_cap,
        name=defn.name or "",
    )


def load_algebra(path: Path, p: int | None = None) -> BasedAlgebra:
    return build_algebra(load_definition(path), p)
