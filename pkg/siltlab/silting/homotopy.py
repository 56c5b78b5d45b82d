"""Hom spaces between two-term complexes in the homotopy category.

For two-term ``T`` and ``U`` a chain map is a pair ``(f0, f1)`` with
``f0 o d_T = d_U o f1``; it is null-homotopic when ``(f0, f1) =
(d_U o h, h o d_T)`` for some ``h: T^0 -> U^-1``. ``Hom(T, U[1])`` is the
cokernel of ``(f0, f1) -> f0 o d_T - d_U o f1`` on ``Hom(T^-1, U^0)``, and
``Hom(T, U[i])`` vanishes for ``i >= 2`` since both complexes sit in two
adjacent degrees.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass, field
from itertools import product

import numpy as np

from siltlab.algebra.based import BasedAlgebra
from siltlab.algebra.field import (
    FMatrix,
    independent_rows,
    kernel_basis,
    left_inverse,
    rank,
    rref,
)
from siltlab.silting.complexes import BlockMatrix, ChainMap, TwoTermComplex


class Layout:
    """Flat coordinates of maps ``sum P_source -> sum P_target``."""

    def __init__(
        self, algebra: BasedAlgebra, target: Sequence[int], source: Sequence[int]
    ) -> None:
        self.algebra = algebra
        self.target = tuple(target)
        self.source = tuple(source)
        self.slices: dict[tuple[int, int], slice] = {}
        pos = 0
        for r, vr in enumerate(self.target):
            for c, vc in enumerate(self.source):
                d = algebra.dim(vr, vc)
                self.slices[(r, c)] = slice(pos, pos + d)
                pos += d
        self.size = pos

    def pack(self, blocks: BlockMatrix) -> FMatrix:
        out = np.zeros(self.size, dtype=np.int64)
        for (r, c), sl in self.slices.items():
            out[sl] = blocks[r][c]
        return out

    def unpack(self, vec: FMatrix) -> BlockMatrix:
        return [
            [
                np.asarray(vec[self.slices[(r, c)]], dtype=np.int64)
                for c in range(len(self.source))
            ]
            for r in range(len(self.target))
        ]


def left_composition(
    algebra: BasedAlgebra,
    g: BlockMatrix,
    g_target: Sequence[int],
    g_source: Sequence[int],
    source: Sequence[int],
) -> FMatrix:
    """Matrix of ``f -> g o f``.

    Maps ``Layout(g_source, source)`` to ``Layout(g_target, source)``.
    """
    dom = Layout(algebra, g_source, source)
    cod = Layout(algebra, g_target, source)
    mat = np.zeros((cod.size, dom.size), dtype=np.int64)
    for t, vt in enumerate(g_target):
        for m, vm in enumerate(g_source):
            entry = g[t][m]
            if not entry.size or not entry.any():
                continue
            for s, vs in enumerate(source):
                if algebra.dim(vt, vs) and algebra.dim(vm, vs):
                    block = algebra.left_operator(vt, vm, vs, entry)
                    mat[cod.slices[(t, s)], dom.slices[(m, s)]] += block
    return mat % algebra.p


def right_composition(
    algebra: BasedAlgebra,
    g: BlockMatrix,
    g_target: Sequence[int],
    g_source: Sequence[int],
    target: Sequence[int],
) -> FMatrix:
    """Matrix of ``f -> f o g``.

    Maps ``Layout(target, g_target)`` to ``Layout(target, g_source)``.
    """
    dom = Layout(algebra, target, g_target)
    cod = Layout(algebra, target, g_source)
    mat = np.zeros((cod.size, dom.size), dtype=np.int64)
    for t, vt in enumerate(g_target):
        for s, vs in enumerate(g_source):
            entry = g[t][s]
            if not entry.size or not entry.any():
                continue
            for r, vr in enumerate(target):
                if algebra.dim(vr, vt) and algebra.dim(vr, vs):
                    block = algebra.right_operator(vr, vt, vs, entry)
                    mat[cod.slices[(r, s)], dom.slices[(r, t)]] += block
    return mat % algebra.p


def _cycle_map(
    algebra: BasedAlgebra, source: TwoTermComplex, target: TwoTermComplex
) -> tuple[FMatrix, Layout, Layout, Layout]:
    """``(f0, f1) -> f0 o d_T - d_U o f1`` with its domain and codomain layouts."""
    lay0 = Layout(algebra, target.deg0, source.deg0)
    lay1 = Layout(algebra, target.degm1, source.degm1)
    cod = Layout(algebra, target.deg0, source.degm1)
    first = right_composition(
        algebra, source.diff, source.deg0, source.degm1, target.deg0
    )
    second = left_composition(
        algebra, target.diff, target.deg0, target.degm1, source.degm1
    )
    phi = np.concatenate(
        [first.reshape(cod.size, lay0.size), (-second.reshape(cod.size, lay1.size))],
        axis=1,
    ) % algebra.p
    return phi, lay0, lay1, cod


def _homotopy_map(
    algebra: BasedAlgebra, source: TwoTermComplex, target: TwoTermComplex
) -> FMatrix:
    """``h -> (d_U o h, h o d_T)`` as a matrix into the chain-map coordinates."""
    top = left_composition(algebra, target.diff, target.deg0, target.degm1, source.deg0)
    bottom = right_composition(
        algebra, source.diff, source.deg0, source.degm1, target.degm1
    )
    dom = Layout(algebra, target.degm1, source.deg0).size
    lay0 = Layout(algebra, target.deg0, source.deg0).size
    lay1 = Layout(algebra, target.degm1, source.degm1).size
    return np.concatenate(
        [top.reshape(lay0, dom), bottom.reshape(lay1, dom)], axis=0
    ) % algebra.p


@dataclass
class HomSpace:
    """``Hom_K(source, target)`` with one chain map per basis class."""

    algebra: BasedAlgebra
    source: TwoTermComplex
    target: TwoTermComplex
    dim: int
    vectors: FMatrix  # class representatives as rows in chain-map coordinates
    split: int  # f0 occupies coordinates [0, split)
    projector: FMatrix = field(repr=False)
    _maps: list[ChainMap] | None = field(default=None, repr=False)

    @property
    def basis(self) -> list[ChainMap]:
        if self._maps is None:
            self._maps = [self.to_chain_map(v) for v in self.vectors]
        return self._maps

    def to_chain_map(self, vec: FMatrix) -> ChainMap:
        lay0 = Layout(self.algebra, self.target.deg0, self.source.deg0)
        lay1 = Layout(self.algebra, self.target.degm1, self.source.degm1)
        return ChainMap(lay0.unpack(vec[: self.split]), lay1.unpack(vec[self.split :]))

    def from_chain_map(self, f: ChainMap) -> FMatrix:
        lay0 = Layout(self.algebra, self.target.deg0, self.source.deg0)
        lay1 = Layout(self.algebra, self.target.degm1, self.source.degm1)
        return np.concatenate([lay0.pack(f.f0), lay1.pack(f.fm1)])

    def coordinates(self, vectors: FMatrix) -> FMatrix:
        """Class coordinates of chain maps given as rows."""
        if self.dim == 0:
            return np.zeros((vectors.shape[0], 0), dtype=np.int64)
        return (vectors @ self.projector.T) % self.algebra.p


def hom_degree0(
    algebra: BasedAlgebra, source: TwoTermComplex, target: TwoTermComplex
) -> HomSpace:
    """Chain maps modulo null-homotopic maps, with class representatives."""
    p = algebra.p
    phi, lay0, lay1, _ = _cycle_map(algebra, source, target)
    total = lay0.size + lay1.size
    if phi.shape[0]:
        cycles = kernel_basis(phi, p, cols=total)
    else:
        cycles = np.eye(total, dtype=np.int64)
    psi = _homotopy_map(algebra, source, target)
    boundary_rows = psi.T % p
    boundaries = rref(boundary_rows, p) if boundary_rows.size else None
    if boundaries is not None and boundaries.rank == 0:
        boundaries = None
    picked = independent_rows(cycles, p, modulo=boundaries) if cycles.shape[0] else []
    reps = cycles[picked] if picked else np.zeros((0, total), dtype=np.int64)
    b_rows = (
        boundaries.matrix[: boundaries.rank]
        if boundaries is not None
        else np.zeros((0, total), dtype=np.int64)
    )
    if reps.shape[0]:
        # left inverse of [B | H]; keep the H rows to read off class coordinates
        columns = np.concatenate([b_rows, reps], axis=0).T
        projector = left_inverse(columns, p)[b_rows.shape[0] :]
    else:
        projector = np.zeros((0, total), dtype=np.int64)
    return HomSpace(
        algebra=algebra,
        source=source,
        target=target,
        dim=reps.shape[0],
        vectors=reps,
        split=lay0.size,
        projector=projector,
    )


def hom_shift1(
    algebra: BasedAlgebra, source: TwoTermComplex, target: TwoTermComplex
) -> int:
    """``dim Hom_K(source, target[1])``."""
    phi, _, _, cod = _cycle_map(algebra, source, target)
    if cod.size == 0:
        return 0
    return cod.size - rank(phi, algebra.p)


def is_presilting(algebra: BasedAlgebra, complex_: TwoTermComplex) -> bool:
    return hom_shift1(algebra, complex_, complex_) == 0


def is_two_term_silting(
    algebra: BasedAlgebra, summands: Sequence[TwoTermComplex]
) -> bool:
    """Presilting sum of ``n`` summands with pairwise distinct g-vectors."""
    if len(summands) != algebra.n:
        return False
    if not all(s.is_minimal() for s in summands):
        return False
    gs = {s.g_vector(algebra.n) for s in summands}
    if len(gs) != algebra.n:
        return False
    return all(
        hom_shift1(algebra, a, b) == 0 for a, b in product(summands, repeat=2)
    )


def eigenvalue(top: FMatrix, p: int) -> int:
    """The unique eigenvalue of a matrix that is scalar plus nilpotent."""
    size = top.shape[0]
    eye = np.eye(size, dtype=np.int64)
    for lam in range(p):
        if rank((top - lam * eye) % p, p) < size:
            return lam
    raise ValueError("Matrix has no eigenvalue in the prime field")


def top_matrix(
    chain_map: ChainMap, source: TwoTermComplex, target: TwoTermComplex
) -> FMatrix:
    """Idempotent coefficients of an endomorphism, block diagonal over both degrees."""
    n0, n1 = len(source.deg0), len(source.degm1)
    out = np.zeros((n0 + n1, n0 + n1), dtype=np.int64)
    for r, c in product(range(n0), repeat=2):
        if target.deg0[r] == source.deg0[c]:
            out[r, c] = chain_map.f0[r][c][0]
    for r, c in product(range(n1), repeat=2):
        if target.degm1[r] == source.degm1[c]:
            out[n0 + r, n0 + c] = chain_map.fm1[r][c][0]
    return out


def radical_endomorphisms(space: HomSpace) -> FMatrix:
    """Rows (in class coordinates) spanning ``rad End`` of an indecomposable."""
    p = space.algebra.p
    if space.dim == 0:
        return np.zeros((0, 0), dtype=np.int64)
    lams = np.array(
        [
            eigenvalue(top_matrix(f, space.source, space.target), p)
            for f in space.basis
        ],
        dtype=np.int64,
    )
    return kernel_basis(lams.reshape(1, -1), p, cols=space.dim)
