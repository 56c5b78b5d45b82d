"""Irreducible left mutation of basic two-term silting complexes."""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass

import numpy as np

from siltlab.algebra.based import BasedAlgebra
from siltlab.algebra.field import FMatrix, rref
from siltlab.errors import ValidationFailure
from siltlab.logging import get_logger
from siltlab.silting.complexes import (
    ChainMap,
    GVector,
    TwoTermComplex,
    cone,
    direct_sum,
    minimize,
)
from siltlab.silting.homotopy import (
    HomSpace,
    hom_degree0,
    is_two_term_silting,
    left_composition,
    radical_endomorphisms,
)

SignVector = tuple[int, ...]


@dataclass(frozen=True, eq=False)
class SiltingObject:
    """A basic two-term silting complex as ``n`` summands sorted by g-vector."""

    summands: tuple[TwoTermComplex, ...]
    key: tuple[GVector, ...]

    @classmethod
    def from_summands(
        cls, summands: Sequence[TwoTermComplex], n: int
    ) -> SiltingObject:
        pairs = sorted(((s.g_vector(n), s) for s in summands), key=lambda t: t[0])
        return cls(tuple(s for _, s in pairs), tuple(g for g, _ in pairs))

    @classmethod
    def regular(cls, n: int) -> SiltingObject:
        """``A`` itself: every ``P_i`` in degree 0."""
        return cls.from_summands([TwoTermComplex.stalk(v, 0) for v in range(n)], n)

    @classmethod
    def shifted(cls, n: int) -> SiltingObject:
        """``A[1]``: every ``P_i`` in degree -1."""
        return cls.from_summands([TwoTermComplex.stalk(v, -1) for v in range(n)], n)

    @property
    def n(self) -> int:
        return len(self.key)

    @property
    def g_vector(self) -> GVector:
        return tuple(int(sum(col)) for col in zip(*self.key))

    @property
    def g_matrix(self) -> list[list[int]]:
        return [list(g) for g in self.key]

    def replace(self, index: int, summand: TwoTermComplex) -> SiltingObject:
        parts = list(self.summands)
        parts[index] = summand
        return SiltingObject.from_summands(parts, self.n)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, SiltingObject) and self.key == other.key

    def __hash__(self) -> int:
        return hash(self.key)


def orthant_of(obj: SiltingObject) -> SignVector:
    """Entrywise sign of the total g-vector."""
    return tuple((g > 0) - (g < 0) for g in obj.g_vector)


@dataclass(frozen=True)
class LeavesTwoTerm:
    """Marker for a left mutation whose cone keeps a term in degree -2."""

    index: int


class HomCalculator:
    """Shared Hom-space cache for the summands of one algebra.

    Summands are identified by their g-vector. The first complex seen for a
    g-vector becomes its representative, and every cached Hom space refers
    to representatives only.
    """

    def __init__(self, algebra: BasedAlgebra, max_entries: int = 250_000) -> None:
        self.algebra = algebra
        self.max_entries = max_entries
        self._summands: dict[GVector, TwoTermComplex] = {}
        self._homs: dict[tuple[GVector, GVector], HomSpace] = {}
        self._radicals: dict[GVector, FMatrix] = {}
        self.hits = 0
        self.misses = 0

    def canonical(self, summand: TwoTermComplex) -> TwoTermComplex:
        return self._summands.setdefault(summand.g_vector(self.algebra.n), summand)

    def canonicalize(self, obj: SiltingObject) -> SiltingObject:
        summands = tuple(self.canonical(s) for s in obj.summands)
        if all(a is b for a, b in zip(summands, obj.summands)):
            return obj
        return SiltingObject(summands, obj.key)

    def hom(self, source: TwoTermComplex, target: TwoTermComplex) -> HomSpace:
        n = self.algebra.n
        key = (source.g_vector(n), target.g_vector(n))
        space = self._homs.get(key)
        if space is not None:
            self.hits += 1
            return space
        self.misses += 1
        if len(self._homs) >= self.max_entries:
            self._homs.clear()
        space = hom_degree0(
            self.algebra, self.canonical(source), self.canonical(target)
        )
        return self._homs.setdefault(key, space)

    def radical(self, summand: TwoTermComplex) -> tuple[HomSpace, FMatrix]:
        """``End`` of a summand and the rows of its radical in class coordinates."""
        g = summand.g_vector(self.algebra.n)
        space = self.hom(summand, summand)
        rad = self._radicals.get(g)
        if rad is None:
            rad = self._radicals.setdefault(g, radical_endomorphisms(space))
        return space, rad


@dataclass(frozen=True, eq=False)
class Approximation:
    """A minimal left ``add(Y)``-approximation ``f: X -> Z``."""

    multiplicities: tuple[int, ...]
    target: TwoTermComplex
    map: ChainMap


def _composition_matrix(
    algebra: BasedAlgebra,
    h: ChainMap,
    source: TwoTermComplex,
    middle: TwoTermComplex,
    target: TwoTermComplex,
) -> FMatrix:
    """Matrix of ``g -> h o g`` on chain-map coordinates ``source -> middle``."""
    top = left_composition(algebra, h.f0, target.deg0, middle.deg0, source.deg0)
    bottom = left_composition(algebra, h.fm1, target.degm1, middle.degm1, source.degm1)
    out = np.zeros(
        (top.shape[0] + bottom.shape[0], top.shape[1] + bottom.shape[1]),
        dtype=np.int64,
    )
    out[: top.shape[0], : top.shape[1]] = top
    out[top.shape[0] :, top.shape[1] :] = bottom
    return out


def minimal_left_approximation(
    algebra: BasedAlgebra,
    source: TwoTermComplex,
    others: Sequence[TwoTermComplex],
    homs: HomCalculator | None = None,
) -> Approximation:
    """Minimal left approximation of ``source`` by ``add`` of ``others``.

    ``others`` must be pairwise non-isomorphic indecomposables. The copies of
    ``Y_j`` needed are ``Hom(X, Y_j)`` modulo the maps factoring through a
    radical map ``Y_k -> Y_j``.
    """
    p = algebra.p
    homs = homs or HomCalculator(algebra)
    source = homs.canonical(source)
    others = [homs.canonical(y) for y in others]
    spaces = [homs.hom(source, y) for y in others]
    multiplicities: list[int] = []
    chosen: list[tuple[int, FMatrix]] = []
    for j, target in enumerate(others):
        here = spaces[j]
        if here.dim == 0:
            multiplicities.append(0)
            continue
        rows: list[FMatrix] = []
        for k, middle in enumerate(others):
            there = spaces[k]
            if there.dim == 0:
                continue
            if k == j:
                end, rad = homs.radical(middle)
                radical_maps = (rad @ end.vectors) % p if rad.shape[0] else rad
                link = end
            else:
                link = homs.hom(middle, target)
                radical_maps = link.vectors
            for vec in radical_maps:
                mat = _composition_matrix(
                    algebra, link.to_chain_map(vec), source, middle, target
                )
                images = (there.vectors @ mat.T) % p
                rows.append(here.coordinates(images))
        if rows:
            reduced = rref(np.concatenate(rows, axis=0), p)
            pivots = set(reduced.pivots)
        else:
            pivots = set()
        free = [a for a in range(here.dim) if a not in pivots]
        multiplicities.append(len(free))
        for a in free:
            chosen.append((j, here.vectors[a]))

    parts = [others[j] for j, _ in chosen]
    target_sum = direct_sum(algebra, parts)
    f0_rows: list = []
    fm1_rows: list = []
    for j, vec in chosen:
        f = spaces[j].to_chain_map(vec)
        f0_rows.extend(f.f0)
        fm1_rows.extend(f.fm1)
    return Approximation(tuple(multiplicities), target_sum, ChainMap(f0_rows, fm1_rows))


def left_mutation(
    algebra: BasedAlgebra,
    obj: SiltingObject,
    index: int,
    homs: HomCalculator | None = None,
    validate: bool = False,
) -> SiltingObject | LeavesTwoTerm:
    """Replace summand ``index`` by the cone of its minimal left approximation.

    Returns :class:`LeavesTwoTerm` when the minimized cone keeps a term in
    degree -2. The new summand is not registered with ``homs``; callers
    that keep the result pass it through :meth:`HomCalculator.canonicalize`.
    """
    homs = homs or HomCalculator(algebra)
    obj = homs.canonicalize(obj)
    summand = obj.summands[index]
    others = [s for k, s in enumerate(obj.summands) if k != index]
    approx = minimal_left_approximation(algebra, summand, others, homs)
    if validate and not approx.map.commutes(algebra, summand, approx.target):
        raise ValidationFailure(
            f"Approximation of summand {index} is not a chain map", key=obj.key
        )
    reduced = minimize(algebra, cone(algebra, approx.map, summand, approx.target))
    if reduced.terms[0]:
        get_logger().debug(
            "Mutation of %s at summand %d leaves the two-term window",
            obj.key,
            index,
        )
        return LeavesTwoTerm(index)
    result = obj.replace(index, reduced.to_two_term().normalized())
    if validate and not is_two_term_silting(algebra, result.summands):
        raise ValidationFailure(
            f"Mutation of summand {index} produced an invalid object", key=result.key
        )
    return result
