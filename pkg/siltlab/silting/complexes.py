"""Complexes of projectives in degrees -2..0 and their minimization.

A map between sums of indecomposable projectives is a block matrix whose
entry ``[r][c]`` is the coordinate vector of an element of
``e_{target[r]} A e_{source[c]}``. Composition ``G o F`` is the matrix
product with algebra multiplication ``G[t][m] * F[m][s]``.
"""

from __future__ import annotations

from collections.abc import Mapping, Sequence
from dataclasses import dataclass, field
from typing import Any

import numpy as np

from siltlab.algebra.based import BasedAlgebra
from siltlab.algebra.field import FMatrix, rank, solve
from siltlab.errors import NotMinimal, SiltlabError

BlockMatrix = list[list[FMatrix]]
GVector = tuple[int, ...]


def zero_map(
    algebra: BasedAlgebra, target: Sequence[int], source: Sequence[int]
) -> BlockMatrix:
    return [
        [np.zeros(algebra.dim(t, s), dtype=np.int64) for s in source] for t in target
    ]


def compose(
    algebra: BasedAlgebra,
    g: BlockMatrix,
    f: BlockMatrix,
    target: Sequence[int],
    middle: Sequence[int],
    source: Sequence[int],
) -> BlockMatrix:
    """``g o f`` for ``f: source -> middle`` and ``g: middle -> target``."""
    out = zero_map(algebra, target, source)
    for t, vt in enumerate(target):
        for s, vs in enumerate(source):
            if not algebra.dim(vt, vs):
                continue
            acc = out[t][s]
            for m, vm in enumerate(middle):
                a, b = g[t][m], f[m][s]
                if a.size and b.size and a.any() and b.any():
                    acc = acc + algebra.block_product(vt, vm, vs, a, b)
            out[t][s] = acc % algebra.p
    return out


def is_zero_map(f: BlockMatrix) -> bool:
    return not any(entry.any() for row in f for entry in row)


@dataclass(frozen=True)
class ProjectiveSum:
    """An ordered direct sum of indecomposable projectives (0-based vertices)."""

    vertices: tuple[int, ...] = ()

    @classmethod
    def from_multiplicities(cls, multiplicities: Sequence[int]) -> ProjectiveSum:
        if any(m < 0 for m in multiplicities):
            raise SiltlabError("Multiplicities must be non-negative")
        return cls(tuple(v for v, m in enumerate(multiplicities) for _ in range(m)))

    def multiplicities(self, n: int) -> tuple[int, ...]:
        counts = [0] * n
        for v in self.vertices:
            counts[v] += 1
        return tuple(counts)

    def __len__(self) -> int:
        return len(self.vertices)


@dataclass(frozen=True, eq=False)
class TwoTermComplex:
    """``degm1 --diff--> deg0``.

    ``diff[r][c]`` is an element of ``e_{deg0[r]} A e_{degm1[c]}``.
    """

    degm1: tuple[int, ...]
    deg0: tuple[int, ...]
    diff: BlockMatrix = field(default_factory=list)

    @classmethod
    def stalk(cls, vertex: int, degree: int = 0) -> TwoTermComplex:
        """``P_vertex`` placed in degree 0 or -1."""
        if degree == 0:
            return cls((), (vertex,), [[]])
        if degree == -1:
            return cls((vertex,), (), [])
        raise SiltlabError(f"Two-term stalks live in degree 0 or -1, got {degree}")

    @property
    def source(self) -> ProjectiveSum:
        return ProjectiveSum(self.degm1)

    @property
    def target(self) -> ProjectiveSum:
        return ProjectiveSum(self.deg0)

    def is_minimal(self) -> bool:
        """All same-vertex entries lie in the radical."""
        for r, vr in enumerate(self.deg0):
            for c, vc in enumerate(self.degm1):
                if vr == vc and int(self.diff[r][c][0]) != 0:
                    return False
        return True

    def g_vector(self, n: int) -> GVector:
        if not self.is_minimal():
            raise NotMinimal("g-vectors are only defined for minimal complexes")
        g = [0] * n
        for v in self.deg0:
            g[v] += 1
        for v in self.degm1:
            g[v] -= 1
        return tuple(g)

    def normalized(self) -> TwoTermComplex:
        """The same complex with both terms sorted by vertex."""
        rows = sorted(range(len(self.deg0)), key=lambda r: self.deg0[r])
        cols = sorted(range(len(self.degm1)), key=lambda c: self.degm1[c])
        if rows == sorted(rows) and cols == sorted(cols):
            return self
        return TwoTermComplex(
            tuple(self.degm1[c] for c in cols),
            tuple(self.deg0[r] for r in rows),
            [[self.diff[r][c] for c in cols] for r in rows],
        )

    def to_record(self, n: int) -> dict:
        """Multiplicities plus differential rows in vertex order."""
        cx = self.normalized()
        return {
            "deg0": list(cx.target.multiplicities(n)),
            "degm1": list(cx.source.multiplicities(n)),
            "diff": [[[int(x) for x in entry] for entry in row] for row in cx.diff],
        }

    @classmethod
    def from_record(cls, record: Mapping[str, Any]) -> TwoTermComplex:
        deg0 = ProjectiveSum.from_multiplicities(record["deg0"]).vertices
        degm1 = ProjectiveSum.from_multiplicities(record["degm1"]).vertices
        diff = [
            [np.asarray(entry, dtype=np.int64) for entry in row]
            for row in record["diff"]
        ]
        if len(diff) != len(deg0) or any(len(row) != len(degm1) for row in diff):
            raise SiltlabError("Differential does not match the recorded terms")
        return cls(degm1, deg0, diff)


def g_vector(complex_: TwoTermComplex, n: int) -> GVector:
    return complex_.g_vector(n)


def direct_sum(
    algebra: BasedAlgebra, parts: Sequence[TwoTermComplex]
) -> TwoTermComplex:
    degm1 = tuple(v for part in parts for v in part.degm1)
    deg0 = tuple(v for part in parts for v in part.deg0)
    diff = zero_map(algebra, deg0, degm1)
    r0 = c0 = 0
    for part in parts:
        for r in range(len(part.deg0)):
            for c in range(len(part.degm1)):
                diff[r0 + r][c0 + c] = part.diff[r][c]
        r0 += len(part.deg0)
        c0 += len(part.degm1)
    return TwoTermComplex(degm1, deg0, diff)


def h0_dimension_vector(
    algebra: BasedAlgebra, complex_: TwoTermComplex
) -> tuple[int, ...]:
    """Dimension vector of the cokernel of the differential, vertex by vertex."""
    dims = []
    for j in range(algebra.n):
        rows = [algebra.dim(v, j) for v in complex_.deg0]
        cols = [algebra.dim(v, j) for v in complex_.degm1]
        total = sum(rows)
        if not total or not sum(cols):
            dims.append(total)
            continue
        mat = np.zeros((total, sum(cols)), dtype=np.int64)
        r0 = 0
        for r, vr in enumerate(complex_.deg0):
            c0 = 0
            for c, vc in enumerate(complex_.degm1):
                if rows[r] and cols[c]:
                    mat[r0 : r0 + rows[r], c0 : c0 + cols[c]] = algebra.left_operator(
                        vr, vc, j, complex_.diff[r][c]
                    )
                c0 += cols[c]
            r0 += rows[r]
        dims.append(total - rank(mat, algebra.p))
    return tuple(dims)


@dataclass(frozen=True, eq=False)
class ChainMap:
    """Degreewise components of a map of two-term complexes."""

    f0: BlockMatrix
    fm1: BlockMatrix

    def commutes(
        self, algebra: BasedAlgebra, source: TwoTermComplex, target: TwoTermComplex
    ) -> bool:
        left = compose(
            algebra, self.f0, source.diff, target.deg0, source.deg0, source.degm1
        )
        right = compose(
            algebra, target.diff, self.fm1, target.deg0, target.degm1, source.degm1
        )
        return all(
            np.array_equal(a, b)
            for row_a, row_b in zip(left, right)
            for a, b in zip(row_a, row_b)
        )


@dataclass
class ProjectiveComplex:
    """Terms listed from lowest degree up to degree 0.

    ``diffs[k]`` maps ``terms[k]`` to ``terms[k + 1]``.
    """

    terms: list[list[int]]
    diffs: list[BlockMatrix]

    @property
    def lowest_degree(self) -> int:
        return 1 - len(self.terms)

    def is_minimal(self) -> bool:
        return self._unit_entry() is None

    def _unit_entry(self) -> tuple[int, int, int] | None:
        for k, diff in enumerate(self.diffs):
            for r, vr in enumerate(self.terms[k + 1]):
                for c, vc in enumerate(self.terms[k]):
                    if vr == vc and int(diff[r][c][0]) != 0:
                        return k, r, c
        return None

    def to_two_term(self) -> TwoTermComplex:
        if len(self.terms) > 2 and any(self.terms[:-2]):
            raise SiltlabError("Complex has terms below degree -1")
        return TwoTermComplex(
            tuple(self.terms[-2]), tuple(self.terms[-1]), self.diffs[-1]
        )


def cone(
    algebra: BasedAlgebra,
    f: ChainMap,
    source: TwoTermComplex,
    target: TwoTermComplex,
) -> ProjectiveComplex:
    """Mapping cone with differentials ``[-d_X ; f^-1]`` and ``[f^0 | d_Z]``."""
    p = algebra.p
    mid = list(source.deg0) + list(target.degm1)
    lower = zero_map(algebra, mid, source.degm1)
    for r in range(len(source.deg0)):
        for c in range(len(source.degm1)):
            lower[r][c] = (-source.diff[r][c]) % p
    for r in range(len(target.degm1)):
        for c in range(len(source.degm1)):
            lower[len(source.deg0) + r][c] = f.fm1[r][c] % p
    upper = zero_map(algebra, target.deg0, mid)
    for r in range(len(target.deg0)):
        for c in range(len(source.deg0)):
            upper[r][c] = f.f0[r][c] % p
        for c in range(len(target.degm1)):
            upper[r][len(source.deg0) + c] = target.diff[r][c] % p
    return ProjectiveComplex(
        [list(source.degm1), mid, list(target.deg0)], [lower, upper]
    )


def _local_inverse(algebra: BasedAlgebra, v: int, u: FMatrix) -> FMatrix:
    left = algebra.left_operator(v, v, v, u)
    unit = np.zeros(algebra.dim(v, v), dtype=np.int64)
    unit[0] = 1
    x = solve(left, unit, algebra.p)
    if x is None:
        raise SiltlabError(f"Entry is not a unit of e_{v + 1} A e_{v + 1}")
    return x


def _cancel(
    algebra: BasedAlgebra, cx: ProjectiveComplex, k: int, r: int, c: int
) -> None:
    """Remove the contractible summand carried by the unit ``diffs[k][r][c]``."""
    p = algebra.p
    src, tgt = cx.terms[k], cx.terms[k + 1]
    diff = cx.diffs[k]
    v = src[c]
    u_inv = _local_inverse(algebra, v, diff[r][c])
    keep_rows = [i for i in range(len(tgt)) if i != r]
    keep_cols = [j for j in range(len(src)) if j != c]
    new = zero_map(algebra, [tgt[i] for i in keep_rows], [src[j] for j in keep_cols])
    for a, i in enumerate(keep_rows):
        gamma = diff[i][c]
        # gamma * u^-1 lands in e_{tgt[i]} A e_v
        gu = (
            algebra.block_product(tgt[i], v, v, gamma, u_inv)
            if gamma.any()
            else gamma
        )
        for b, j in enumerate(keep_cols):
            entry = diff[i][j]
            beta = diff[r][j]
            if gu.any() and beta.any():
                entry = entry - algebra.block_product(tgt[i], v, src[j], gu, beta)
            new[a][b] = entry % p
    cx.diffs[k] = new
    if k > 0:
        prev = cx.diffs[k - 1]
        cx.diffs[k - 1] = [row for j, row in enumerate(prev) if j != c]
    if k + 1 < len(cx.diffs):
        nxt = cx.diffs[k + 1]
        cx.diffs[k + 1] = [[e for i, e in enumerate(row) if i != r] for row in nxt]
    cx.terms[k] = [src[j] for j in keep_cols]
    cx.terms[k + 1] = [tgt[i] for i in keep_rows]


def minimize(algebra: BasedAlgebra, complex_: ProjectiveComplex) -> ProjectiveComplex:
    """Cancel unit entries until every differential entry is radical."""
    cx = ProjectiveComplex(
        [list(t) for t in complex_.terms],
        [[list(row) for row in diff] for diff in complex_.diffs],
    )
    while (hit := cx._unit_entry()) is not None:
        _cancel(algebra, cx, *hit)
    return cx
