from __future__ import annotations

import os
from pathlib import Path
from typing import Literal

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from siltlab.algebra.quiver import Arrow, Quiver, Relation
from siltlab.errors import PresentationError

OutputFormat = Literal["text", "json", "dot"]
MoritaClass = str
RepresentationType = Literal["SEMISIMPLE", "FINITE", "TAME", "WILD"]


def _is_prime(p: int) -> bool:
    return p >= 2 and all(p % d for d in range(2, int(p**0.5) + 1))


class ArrowSpec(BaseModel):
    """One arrow of an algebra file: ``{"name", "from", "to"}``."""

    model_config = ConfigDict(populate_by_name=True)

    name: str = Field(min_length=1)
    source: int = Field(alias="from", ge=1)
    target: int = Field(alias="to", ge=1)


class TermSpec(BaseModel):
    """One term ``coeff * path`` of a relation."""

    coeff: int = 1
    path: list[str] = Field(min_length=1)


class AlgebraDefinition(BaseModel):
    """The algebra file format (JSON or YAML)."""

    p: int = 2
    vertices: int = Field(ge=1)
    arrows: list[ArrowSpec] = Field(default_factory=list)
    relations: list[list[TermSpec]] = Field(default_factory=list)
    name: str | None = None

    @field_validator("p")
    @classmethod
    def validate_prime(cls, v: int) -> int:
        if not _is_prime(v):
            raise ValueError(f"p must be prime, got {v}")
        return v

    @model_validator(mode="after")
    def validate_presentation(self) -> AlgebraDefinition:
        try:
            quiver = self.to_quiver()
            for rel in self.to_relations():
                quiver.check_relation(rel)
        except PresentationError as exc:
            raise ValueError(exc.message) from exc
        return self

    def to_quiver(self) -> Quiver:
        return Quiver(
            self.vertices,
            tuple(Arrow(a.name, a.source, a.target) for a in self.arrows),
        )

    def to_relations(self) -> list[Relation]:
        return [
            Relation(tuple((t.coeff, tuple(t.path)) for t in rel))
            for rel in self.relations
        ]

    @classmethod
    def from_presentation(
        cls,
        quiver: Quiver,
        relations: list[Relation],
        p: int,
        name: str | None = None,
    ) -> AlgebraDefinition:
        return cls(
            p=p,
            vertices=quiver.n,
            arrows=[
                ArrowSpec(name=a.name, source=a.source, target=a.target)
                for a in quiver.arrows
            ],
            relations=[
                [TermSpec(coeff=c, path=list(w)) for c, w in rel.terms]
                for rel in relations
            ],
            name=name,
        )


class SearchConfig(BaseModel):
    """Validated settings for one enumeration run."""

    budget: int = Field(default=500_000, ge=1)
    threads: int = Field(default_factory=lambda: os.cpu_count() or 1, ge=1)
    validate_objects: bool = Field(default=False, alias="validate")
    checkpoint_interval: int = Field(default=1, ge=1)
    output_format: OutputFormat = "text"
    indent: int = Field(default=2, ge=0)
    checkpoint: Path | None = None

    model_config = ConfigDict(populate_by_name=True)


class ComplexRecord(BaseModel):
    """A minimal two-term complex by multiplicities and differential coordinates."""

    deg0: list[int]
    degm1: list[int]
    diff: list[list[list[int]]]


class EnumerationReport(BaseModel):
    """JSON form of an enumeration result."""

    algebra: str
    p: int
    count: int
    complete: bool
    mutation_count: int
    g_vectors: list[list[int]]
    g_matrices: list[list[list[int]]]
    orthants: list[list[int]]
    dimension_vectors: list[list[int]]
    hasse: list[list[int]]
    complexes: list[list[ComplexRecord]] | None = None


class OrthantRow(BaseModel):
    sign: list[int]
    count: int


class SignDecompositionReport(BaseModel):
    algebra: str
    p: int
    orthants: list[OrthantRow]
    total: int
    direct: int
    complete: bool
    consistent: bool


class BijectionReport(BaseModel):
    a: str
    b: str
    j: list[int]
    count_a: int
    count_b: int
    equal: bool


class BlockReport(BaseModel):
    vertices: list[int]
    size: int
    morita_class: MoritaClass
    finite: bool
    count: int | None = None
    has_square: bool = False


class SchurBlockReport(BaseModel):
    r: int
    p: int
    blocks: list[BlockReport]
    total_finite: bool
    total_count: int | None = None


class Classification(BaseModel):
    n: int
    r: int
    p: int
    finite: bool
    basic_algebra: list[MoritaClass] | None = None
    count: int | None = None
    representation_type: RepresentationType
    note: str | None = None


class AppendixRow(BaseModel):
    algebra: str
    basic_algebra: list[MoritaClass]
    count: int
    note: str | None = None
