"""Report emission: canonical JSON, Graphviz DOT and polars tables.

Every file is written atomically: a temp file in the destination directory
replaces the target only once it has been fully written.
"""

from __future__ import annotations

import json
import tempfile
from abc import ABC, abstractmethod
from collections.abc import Iterable, Sequence
from pathlib import Path

import polars as pl
from pydantic import BaseModel

from siltlab.errors import SiltlabError
from siltlab.models.schemas import SignDecompositionReport
from siltlab.silting.explorer import EnumerationResult

# Fill colours cycled over the blocks of a Schur quiver.
_BLOCK_COLOURS = (
    "lightblue",
    "palegreen",
    "lightsalmon",
    "khaki",
    "plum",
    "lightgrey",
    "lightpink",
    "aquamarine",
)


def atomic_write_text(path: Path, text: str) -> None:
    """Write ``text`` to ``path`` through a temp file and ``Path.replace``."""
    path = Path(path)
    fd, tmp_path = tempfile.mkstemp(dir=path.parent, suffix=".tmp")
    try:
        with open(fd, "w", encoding="utf-8") as f:
            f.write(text)
        Path(tmp_path).replace(path)
    except BaseException:
        Path(tmp_path).unlink(missing_ok=True)
        raise


def to_json(report: BaseModel, indent: int = 2) -> str:
    """Canonical JSON: sorted keys, fixed indentation, trailing newline."""
    data = report.model_dump(mode="json", exclude_none=True, by_alias=True)
    return json.dumps(data, sort_keys=True, indent=indent, ensure_ascii=False) + "\n"


def _vector_label(vec: Sequence[int]) -> str:
    return "(" + ",".join(str(x) for x in vec) + ")"


def _sign_label(sign: Sequence[int]) -> str:
    return "".join("+" if s > 0 else "-" for s in sign)


def hasse_to_dot(result: EnumerationResult) -> str:
    """The Hasse quiver with nodes labelled by total g-vector."""
    name = result.algebra.replace('"', "'")
    lines = [
        "digraph hasse {",
        f'  label="{name} p={result.p} count={result.count}";',
        "  node [shape=box, fontname=monospace];",
    ]
    for i, g in enumerate(result.g_vectors):
        lines.append(f'  n{i} [label="{_vector_label(g)}"];')
    for a, b in result.hasse:
        lines.append(f"  n{a} -> n{b};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def result_table(result: EnumerationResult) -> pl.DataFrame:
    """One row per silting object."""
    return pl.DataFrame(
        {
            "index": list(range(result.count)),
            "g_vector": [list(g) for g in result.g_vectors],
            "orthant": [_sign_label(e) for e in result.orthants],
            "dimension_vector": [list(d) for d in result.dimension_vectors],
            "out_degree": result.out_degrees(),
        },
        schema={
            "index": pl.Int64,
            "g_vector": pl.List(pl.Int64),
            "orthant": pl.Utf8,
            "dimension_vector": pl.List(pl.Int64),
            "out_degree": pl.Int64,
        },
    )


def orthant_table(report: SignDecompositionReport) -> pl.DataFrame:
    """One row per sign vector with its count."""
    return pl.DataFrame(
        {
            "orthant": [_sign_label(row.sign) for row in report.orthants],
            "count": [row.count for row in report.orthants],
        },
        schema={"orthant": pl.Utf8, "count": pl.Int64},
    )


# ---------------------------------------------------------------------------
# Table writers
# ---------------------------------------------------------------------------


class TableWriter(ABC):
    """Strategy interface for writing a table to a file."""

    suffix: str

    @abstractmethod
    def write(self, df: pl.DataFrame, path: Path) -> None:
        """Write *df* to *path*."""


class CsvWriter(TableWriter):
    suffix = ".csv"

    def write(self, df: pl.DataFrame, path: Path) -> None:
        # CSV has no list type; vectors become "(a,b,...)" strings
        lists = [
            name for name, dtype in df.schema.items() if isinstance(dtype, pl.List)
        ]
        flat = df.with_columns(
            pl.concat_str(
                pl.lit("("),
                pl.col(name).cast(pl.List(pl.Utf8)).list.join(","),
                pl.lit(")"),
            ).alias(name)
            for name in lists
        )
        flat.write_csv(path)


class ParquetWriter(TableWriter):
    suffix = ".parquet"

    def write(self, df: pl.DataFrame, path: Path) -> None:
        df.write_parquet(path)


_WRITERS: dict[str, TableWriter] = {
    ".csv": CsvWriter(),
    ".parquet": ParquetWriter(),
}


def write_table(df: pl.DataFrame, path: Path) -> None:
    """Write a table as CSV or Parquet depending on the suffix of ``path``."""
    path = Path(path)
    writer = _WRITERS.get(path.suffix.lower())
    if writer is None:
        supported = ", ".join(sorted(_WRITERS))
        raise SiltlabError(
            f"Unsupported table format '{path.suffix}'. Supported: {supported}"
        )
    with tempfile.NamedTemporaryFile(
        dir=path.parent, suffix=writer.suffix, delete=False
    ) as tmp_f:
        tmp_path = Path(tmp_f.name)
    try:
        writer.write(df, tmp_path)
        tmp_path.replace(path)
    except BaseException:
        tmp_path.unlink(missing_ok=True)
        raise


def schur_quiver_to_dot(
    vertices: Sequence[int],
    edges: Iterable[tuple[int, int]],
    blocks: Sequence[Sequence[int]],
    title: str = "",
) -> str:
    """DOT for a Schur quiver on vertices ``v^s``, one fill colour per block."""
    colour = {}
    for b, block in enumerate(blocks):
        for s in block:
            colour[s] = _BLOCK_COLOURS[b % len(_BLOCK_COLOURS)]
    lines = ["digraph schur {"]
    if title:
        lines.append(f'  label="{title}";')
    lines.append("  node [shape=circle, style=filled];")
    for s in vertices:
        fill = colour.get(s, "white")
        lines.append(f'  v{s} [label="v^{s}", fillcolor={fill}];')
    for s, t in edges:
        lines.append(f"  v{s} -> v{t};")
    lines.append("}")
    return "\n".join(lines) + "\n"
