"""Tables of the tau-tilting finite Schur algebras for ``p = 2, 3``.

Rows are generated from :func:`siltlab.schur.classify.classify`; only the
row selection lives here. ``S(2,r)`` rows come first, then ``S(n,r)`` with
``3 <= n <= r``, since ``S(n,r)`` for ``n > r`` is Morita equivalent to
``S(r,r)``.
"""

from __future__ import annotations

from siltlab.errors import BadParameter
from siltlab.models.schemas import AppendixRow, MoritaClass
from siltlab.schur.classify import BlockCounter, classify

_SUBSCRIPTS = str.maketrans("0123456789", "₀₁₂₃₄₅₆₇₈₉")

# Largest r inspected for S(2,r); every S(2,r) beyond is tau-tilting infinite.
_RANK_TWO_BOUND = {2: 21, 3: 13}


def format_block(block: MoritaClass) -> str:
    """``A2`` -> ``A₂``, ``F`` -> ``𝔽``."""
    if block == "F":
        return "𝔽"
    return block[:1] + block[1:].translate(_SUBSCRIPTS)


def format_blocks(blocks: list[MoritaClass]) -> str:
    return " ⊕ ".join(format_block(b) for b in blocks)


def _rank_two_rows(p: int, counter: BlockCounter) -> list[AppendixRow]:
    rows: list[AppendixRow] = []
    last_r = 0
    for r in range(1, _RANK_TWO_BOUND[p] + 1):
        verdict = classify(2, r, p, counter)
        if not verdict.finite:
            continue
        assert verdict.basic_algebra is not None and verdict.count is not None
        if (
            rows
            and last_r == r - 1
            and rows[-1].basic_algebra == verdict.basic_algebra
            and rows[-1].note is None
        ):
            rows[-1].note = f"≃ S(2,{r})"
            last_r = r
            continue
        note = f"≃ S(n,{r}) for any n≥3" if r <= 2 else None
        rows.append(
            AppendixRow(
                algebra=f"S(2,{r})",
                basic_algebra=verdict.basic_algebra,
                count=verdict.count,
                note=note,
            )
        )
        last_r = r
    return rows


def _higher_rank_rows(p: int, counter: BlockCounter) -> list[AppendixRow]:
    rows: list[AppendixRow] = []
    bound = 2 * p + 3
    for n in range(3, bound + 1):
        for r in range(n, bound + 1):
            verdict = classify(n, r, p, counter)
            if not verdict.finite:
                continue
            assert verdict.basic_algebra is not None and verdict.count is not None
            rows.append(
                AppendixRow(
                    algebra=f"S({n},{r})",
                    basic_algebra=verdict.basic_algebra,
                    count=verdict.count,
                    note=f"≃ S(n,{r}) for any n≥{r + 1}" if n == r else None,
                )
            )
    return rows


def appendix_rows(p: int, counter: BlockCounter | None = None) -> list[AppendixRow]:
    """Every tau-tilting finite Schur algebra over ``p``, up to Morita equivalence.

    Raises:
        BadParameter: If ``p`` is not 2 or 3.
    """
    if p not in _RANK_TWO_BOUND:
        raise BadParameter(f"Tables exist for p = 2 and p = 3 only, got {p}")
    counter = counter or BlockCounter()
    return _rank_two_rows(p, counter) + _higher_rank_rows(p, counter)


def format_appendix(p: int, counter: BlockCounter | None = None) -> str:
    """Text table: one ``algebra | basic algebra | count [| note]`` line per row."""
    lines = [f"# tau-tilting finite Schur algebras, p={p}"]
    for row in appendix_rows(p, counter):
        line = f"{row.algebra} | {format_blocks(row.basic_algebra)} | {row.count}"
        if row.note:
            line += f" | {row.note}"
        lines.append(line)
    return "\n".join(lines) + "\n"
