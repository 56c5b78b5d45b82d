"""Build a :class:`BasedAlgebra` from a quiver with relations.

For each start vertex ``i`` the right ideal ``e_i I`` is spanned by the left
multiples ``u * r`` of the relations closed under right multiplication by
arrows. Paths of length ``>= length_cap`` and paths through a monomial
relation are treated as zero from the start; the result is only accepted when
some radical power below the cap vanishes, which makes the truncation exact.
"""

from __future__ import annotations

from collections.abc import Iterator, Sequence
from dataclasses import dataclass
from itertools import product

import numpy as np

from siltlab.algebra.based import BasedAlgebra
from siltlab.algebra.field import FMatrix, RowReduceResult, reduce_against, rref
from siltlab.algebra.quiver import Quiver, Relation
from siltlab.errors import NotAdmissible
from siltlab.logging import get_logger

DEFAULT_LENGTH_CAP = 12
_CHUNK = 256

Word = tuple[str, ...]


@dataclass
class _VertexSpace:
    """Candidate paths out of one vertex and the ideal inside their span."""

    start: int
    paths: list[Word]
    ends: list[int]
    index: dict[Word, int]
    ideal: RowReduceResult | None = None


class _MonomialFilter:
    def __init__(self, words: set[Word]) -> None:
        self.words = words
        self.lengths = sorted({len(w) for w in words})

    def killed_suffix(self, word: Word) -> bool:
        return any(
            len(word) >= length and word[-length:] in self.words
            for length in self.lengths
        )


def _normalise(rel: Relation, p: int) -> Relation | None:
    merged: dict[Word, int] = {}
    for coeff, word in rel.terms:
        merged[word] = (merged.get(word, 0) + coeff) % p
    terms = tuple((c, w) for w, c in sorted(merged.items()) if c)
    return Relation(terms) if terms else None


def _enumerate_paths(
    quiver: Quiver, monomials: _MonomialFilter, cap: int
) -> dict[int, list[tuple[Word, int]]]:
    """All monomial-free paths of length < cap with their end vertex, by start."""
    by_source: dict[int, list[tuple[str, int]]] = {v: [] for v in quiver.vertices}
    for arrow in quiver.arrows:
        by_source[arrow.source].append((arrow.name, arrow.target))
    out: dict[int, list[tuple[Word, int]]] = {}
    for v in quiver.vertices:
        found: list[tuple[Word, int]] = [((), v)]
        stack: list[tuple[Word, int]] = [((), v)]
        while stack:
            word, end = stack.pop()
            if len(word) + 1 >= cap:
                continue
            for name, target in by_source[end]:
                longer = word + (name,)
                if monomials.killed_suffix(longer):
                    continue
                found.append((longer, target))
                stack.append((longer, target))
        out[v] = found
    return out


def _merge(
    basis: RowReduceResult | None, rows: FMatrix, p: int
) -> tuple[RowReduceResult | None, FMatrix]:
    """Add ``rows`` to a fully reduced basis; return it with the new rows."""
    cols = rows.shape[1]
    if basis is not None:
        rows = reduce_against(rows, basis, p)
    rows = rows[rows.any(axis=1)]
    if rows.shape[0] == 0:
        return basis, np.zeros((0, cols), dtype=np.int64)
    fresh = rref(rows, p)
    new_rows = fresh.matrix[: fresh.rank]
    if basis is None:
        return RowReduceResult(new_rows, fresh.rank, fresh.pivots), new_rows
    old = basis.matrix[: basis.rank]
    old = (old - old[:, list(fresh.pivots)] @ new_rows) % p
    stacked = np.concatenate([old, new_rows], axis=0)
    pivots = basis.pivots + fresh.pivots
    order = np.argsort(pivots, kind="stable")
    merged = RowReduceResult(
        stacked[order], basis.rank + fresh.rank, tuple(pivots[k] for k in order)
    )
    return merged, new_rows


def _seed_rows(
    space: _VertexSpace, relations: Sequence[tuple[Relation, int]], p: int
) -> Iterator[FMatrix]:
    """Left multiples ``u * r`` in chunks of dense rows."""
    n_cols = len(space.paths)
    batch: list[FMatrix] = []
    for word, end in zip(space.paths, space.ends):
        for rel, source in relations:
            if source != end:
                continue
            vec = np.zeros(n_cols, dtype=np.int64)
            for coeff, term in rel.terms:
                col = space.index.get(word + term)
                if col is not None:
                    vec[col] += coeff
            vec %= p
            if vec.any():
                batch.append(vec)
            if len(batch) == _CHUNK:
                yield np.stack(batch)
                batch = []
    if batch:
        yield np.stack(batch)


def _close_ideal(
    space: _VertexSpace,
    quiver: Quiver,
    relations: Sequence[tuple[Relation, int]],
    p: int,
) -> None:
    # right multiplication by an arrow is a partial injection on columns
    shifts: list[tuple[np.ndarray, np.ndarray]] = []
    for arrow in quiver.arrows:
        src, dst = [], []
        for col, (word, end) in enumerate(zip(space.paths, space.ends)):
            if end != arrow.source:
                continue
            target = space.index.get(word + (arrow.name,))
            if target is not None:
                src.append(col)
                dst.append(target)
        if src:
            shifts.append((np.array(src), np.array(dst)))

    basis: RowReduceResult | None = None
    frontier: list[FMatrix] = []
    for rows in _seed_rows(space, relations, p):
        basis, fresh = _merge(basis, rows, p)
        if fresh.shape[0]:
            frontier.append(fresh)
    while frontier and shifts:
        pending = np.concatenate(frontier, axis=0)
        frontier = []
        for start in range(0, pending.shape[0], _CHUNK):
            rows = pending[start : start + _CHUNK]
            images = []
            for src, dst in shifts:
                img = np.zeros_like(rows)
                img[:, dst] = rows[:, src]
                images.append(img)
            basis, fresh = _merge(basis, np.concatenate(images, axis=0), p)
            if fresh.shape[0]:
                frontier.append(fresh)
    space.ideal = basis


def algebra_from_presentation(
    quiver: Quiver,
    relations: Sequence[Relation],
    p: int,
    length_cap: int = DEFAULT_LENGTH_CAP,
    name: str = "",
) -> BasedAlgebra:
    """Basis and multiplication of ``F_p Q / I``.

    Raises:
        PresentationError: malformed relations.
        NotAdmissible: no radical power below ``length_cap`` vanishes.
    """
    log = get_logger()
    checked: list[tuple[Relation, int]] = []
    monomial_words: set[Word] = set()
    for rel in relations:
        source, _ = quiver.check_relation(rel)
        reduced = _normalise(rel, p)
        if reduced is None:
            continue
        if reduced.is_monomial:
            monomial_words.add(reduced.terms[0][1])
        else:
            checked.append((reduced, source))
    monomials = _MonomialFilter(monomial_words)

    paths = _enumerate_paths(quiver, monomials, length_cap)
    spaces: dict[int, _VertexSpace] = {}
    for v, words in paths.items():
        # longest first so pivots land on long paths and short paths survive
        ordered = sorted(words, key=lambda we: (-len(we[0]), we[0]))
        space = _VertexSpace(
            v,
            [w for w, _ in ordered],
            [e for _, e in ordered],
            {w: c for c, (w, _) in enumerate(ordered)},
        )
        _close_ideal(space, quiver, checked, p)
        spaces[v] = space

    # normal forms: column -> coordinates over the surviving paths
    basis_words: dict[tuple[int, int], list[Word]] = {}
    normal: dict[int, FMatrix] = {}
    position: dict[int, dict[int, tuple[int, int]]] = {}
    for v, space in spaces.items():
        pivots = set(space.ideal.pivots) if space.ideal is not None else set()
        survivors = [c for c in range(len(space.paths)) if c not in pivots]
        survivors.sort(key=lambda c: (len(space.paths[c]), space.paths[c]))
        nf = np.zeros((len(space.paths), len(survivors)), dtype=np.int64)
        for t, c in enumerate(survivors):
            nf[c, t] = 1
        if space.ideal is not None:
            surv = np.array(survivors, dtype=np.int64)
            for r, c in enumerate(space.ideal.pivots):
                nf[c] = (-space.ideal.matrix[r, surv]) % p if surv.size else 0
        normal[v] = nf
        position[v] = {}
        for t, c in enumerate(survivors):
            word, end = space.paths[c], space.ends[c]
            block = basis_words.setdefault((v - 1, end - 1), [])
            position[v][t] = (end - 1, len(block))
            block.append(word)

    _check_admissible(spaces, normal, length_cap)

    n = quiver.n
    for i, j in product(range(n), repeat=2):
        basis_words.setdefault((i, j), [])
    labels = {
        blk: tuple("*".join(w) if w else f"e{blk[0] + 1}" for w in words)
        for blk, words in basis_words.items()
    }

    tensors: dict[tuple[int, int, int], FMatrix] = {}
    for i, j, k in product(range(n), repeat=3):
        left, right = basis_words[(i, j)], basis_words[(j, k)]
        out = basis_words[(i, k)]
        tensor = np.zeros((len(left), len(right), len(out)), dtype=np.int64)
        space = spaces[i + 1]
        for a, u in enumerate(left):
            for b, w in enumerate(right):
                word = u + w
                col = space.index.get(word)
                if col is None:
                    continue
                for t in np.flatnonzero(normal[i + 1][col]):
                    end, slot = position[i + 1][int(t)]
                    if end == k:
                        tensor[a, b, slot] = normal[i + 1][col, t]
        tensors[(i, j, k)] = tensor

    arrows = {}
    for arrow in quiver.arrows:
        i, j = arrow.source - 1, arrow.target - 1
        coords = np.zeros(len(basis_words[(i, j)]), dtype=np.int64)
        col = spaces[arrow.source].index[(arrow.name,)]
        for t in np.flatnonzero(normal[arrow.source][col]):
            end, slot = position[arrow.source][int(t)]
            coords[slot] = normal[arrow.source][col, t]
        arrows[arrow.name] = (i, j, coords)

    algebra = BasedAlgebra(
        p=p,
        n=n,
        labels=labels,
        tensors=tensors,
        arrows=arrows,
        name=name,
        quiver=quiver,
        relations=tuple(relations),
    )
    log.debug(
        "Built %s over F_%d: dim %d, Cartan %s",
        name or "algebra",
        p,
        algebra.dimension,
        algebra.cartan_matrix().tolist(),
    )
    return algebra


def _check_admissible(
    spaces: dict[int, _VertexSpace], normal: dict[int, FMatrix], cap: int
) -> None:
    """Require some length below the cap at which every path vanishes."""
    survivors_at: dict[int, list[str]] = {}
    for v, space in spaces.items():
        for col, word in enumerate(space.paths):
            if word and normal[v][col].any():
                survivors_at.setdefault(len(word), []).append("*".join(word))
    for length in range(1, cap):
        if not survivors_at.get(length):
            return
    raise NotAdmissible(cap, sorted(survivors_at.get(cap - 1, [])))
