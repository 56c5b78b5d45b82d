"""Sign decomposition of two-term silting objects.

Objects are split by the orthant of their total g-vector. The part lying in
orthant ``eps`` is read off the upper triangular algebra ``A_eps`` built from
the Peirce blocks of ``A``; counting every orthant that way must reproduce a
direct enumeration of ``A``.
"""

from __future__ import annotations

import asyncio
from collections import Counter
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from itertools import product

import numpy as np

from siltlab.algebra.based import BasedAlgebra, Block, null_space_rows, reduce_blocks
from siltlab.algebra.field import FMatrix
from siltlab.catalog import registry
from siltlab.config import DEFAULT_BUDGET
from siltlab.errors import SiltlabError
from siltlab.logging import get_logger
from siltlab.models.schemas import (
    BijectionReport,
    OrthantRow,
    SignDecompositionReport,
)
from siltlab.silting.complexes import GVector
from siltlab.silting.explorer import EnumerationResult, Explorer
from siltlab.silting.mutation import SignVector

_logger = get_logger()

# 2^n orthants are enumerated one by one
MAX_SIGN_VERTICES = 20


def sign_vectors(n: int) -> list[SignVector]:
    """All of ``{+1, -1}^n``, all-positive first."""
    return list(product((1, -1), repeat=n))


def negate(eps: SignVector) -> SignVector:
    return tuple(-e for e in eps)


def parse_sign(text: str) -> SignVector:
    """``"+-+"`` -> ``(1, -1, 1)``."""
    signs = {"+": 1, "-": -1}
    try:
        return tuple(signs[c] for c in text.strip())
    except KeyError as exc:
        raise SiltlabError(f"Sign vector {text!r} may only contain + and -") from exc


def format_sign(eps: SignVector) -> str:
    return "".join("+" if e > 0 else "-" for e in eps)


# ---------------------------------------------------------------------------
# A_eps
# ---------------------------------------------------------------------------


def _annihilator(
    operators: list[FMatrix], rows: int, diagonal: bool, p: int
) -> FMatrix | None:
    """Radical elements of a block killed by every operator.

    ``operators`` act on the block's coordinate row vectors from the right.
    Returns the kernel rows in full block coordinates.
    """
    if rows == 0:
        return None
    if operators:
        stacked = np.concatenate(operators, axis=1)
    else:
        stacked = np.zeros((rows, 0), dtype=np.int64)
    if diagonal:
        kernel = null_space_rows(stacked[1:], p)
        return np.concatenate(
            [np.zeros((kernel.shape[0], 1), dtype=np.int64), kernel], axis=1
        )
    return null_space_rows(stacked, p)


def build_A_epsilon(
    algebra: BasedAlgebra, eps: SignVector, name: str | None = None
) -> BasedAlgebra:
    """The upper triangular algebra attached to the sign vector ``eps``.

    Blocks between positive vertices are taken modulo the radical elements
    ``x`` with ``x * e+Ae- = 0``, blocks between negative vertices modulo
    those with ``e+Ae- * x = 0``. The ``(+, -)`` blocks are kept and the
    ``(-, +)`` blocks are dropped. Vertex labels are unchanged.
    """
    n, p = algebra.n, algebra.p
    if len(eps) != n:
        raise SiltlabError(f"Sign vector has {len(eps)} entries, algebra has {n}")
    plus = [i for i in range(n) if eps[i] > 0]
    minus = [i for i in range(n) if eps[i] < 0]

    kernels: dict[Block, FMatrix] = {}
    for i, k in product(plus, repeat=2):
        operators = [
            algebra.right_operator(i, k, j, basis).T
            for j in minus
            for basis in np.eye(algebra.dim(k, j), dtype=np.int64)
        ]
        kernel = _annihilator(operators, algebra.dim(i, k), i == k, p)
        if kernel is not None:
            kernels[(i, k)] = kernel
    for i, k in product(minus, repeat=2):
        operators = [
            algebra.left_operator(j, i, k, basis).T
            for j in plus
            for basis in np.eye(algebra.dim(j, i), dtype=np.int64)
        ]
        kernel = _annihilator(operators, algebra.dim(i, k), i == k, p)
        if kernel is not None:
            kernels[(i, k)] = kernel
    for i, k in product(minus, plus):
        d = algebra.dim(i, k)
        if d:
            kernels[(i, k)] = np.eye(d, dtype=np.int64)

    label = name if name is not None else f"{algebra.name}_{format_sign(eps)}"
    reduced = reduce_blocks(algebra, kernels, name=label)
    _logger.debug(
        "Built %s: dim %d (from %d)", label, reduced.dimension, algebra.dimension
    )
    return reduced


# ---------------------------------------------------------------------------
# Per-orthant enumeration
# ---------------------------------------------------------------------------


@dataclass
class OrthantCount:
    """Objects of ``A_eps`` whose g-vector lies in orthant ``eps``."""

    sign: SignVector
    count: int
    complete: bool
    g_vectors: list[GVector] = field(default_factory=list)


def _restrict(result: EnumerationResult, eps: SignVector) -> OrthantCount:
    vectors = [g for g, e in zip(result.g_vectors, result.orthants) if e == eps]
    return OrthantCount(eps, len(vectors), result.complete, vectors)


async def enumerate_orthant_async(
    algebra: BasedAlgebra,
    eps: SignVector,
    budget: int = DEFAULT_BUDGET,
    threads: int = 1,
) -> OrthantCount:
    """Full enumeration of ``A_eps`` filtered to orthant ``eps``."""
    reduced = build_A_epsilon(algebra, eps)
    explorer = Explorer(reduced, budget=budget, threads=threads)
    return _restrict(await explorer.run(), eps)


def enumerate_orthant(
    algebra: BasedAlgebra,
    eps: SignVector,
    budget: int = DEFAULT_BUDGET,
    threads: int = 1,
) -> OrthantCount:
    return asyncio.run(enumerate_orthant_async(algebra, eps, budget, threads))


def count_in_orthants(
    result: EnumerationResult, orthants: Iterable[SignVector]
) -> int:
    """Number of objects whose orthant belongs to ``orthants``."""
    wanted = set(orthants)
    return sum(1 for e in result.orthants if e in wanted)


@dataclass
class SignDecomposition:
    """Per-orthant counts next to the direct enumeration they must add up to."""

    algebra: str
    p: int
    orthants: list[OrthantCount]
    direct: EnumerationResult

    @property
    def total(self) -> int:
        return sum(o.count for o in self.orthants)

    @property
    def complete(self) -> bool:
        return self.direct.complete and all(o.complete for o in self.orthants)

    def mismatches(self) -> list[SignVector]:
        """Orthants whose g-vectors differ from the direct enumeration."""
        direct: dict[SignVector, Counter[GVector]] = {}
        for g, e in zip(self.direct.g_vectors, self.direct.orthants):
            direct.setdefault(e, Counter())[g] += 1
        return [
            o.sign
            for o in self.orthants
            if Counter(o.g_vectors) != direct.get(o.sign, Counter())
        ]

    @property
    def consistent(self) -> bool:
        return (
            self.complete
            and self.total == self.direct.count
            and not self.mismatches()
        )

    def to_report(self) -> SignDecompositionReport:
        return SignDecompositionReport(
            algebra=self.algebra,
            p=self.p,
            orthants=[
                OrthantRow(sign=list(o.sign), count=o.count) for o in self.orthants
            ],
            total=self.total,
            direct=self.direct.count,
            complete=self.complete,
            consistent=self.consistent,
        )


async def sign_decomposition_async(
    algebra: BasedAlgebra,
    budget: int = DEFAULT_BUDGET,
    threads: int = 1,
) -> SignDecomposition:
    """Enumerate every orthant through ``A_eps`` and the whole of ``A`` directly."""
    if algebra.n > MAX_SIGN_VERTICES:
        raise SiltlabError(
            f"Sign decomposition is limited to {MAX_SIGN_VERTICES} vertices, "
            f"got {algebra.n}"
        )
    gate = asyncio.Semaphore(threads)

    async def one(eps: SignVector) -> OrthantCount:
        async with gate:
            return await enumerate_orthant_async(algebra, eps, budget, threads=1)

    orthants, direct = await asyncio.gather(
        asyncio.gather(*(one(eps) for eps in sign_vectors(algebra.n))),
        Explorer(algebra, budget=budget, threads=threads).run(),
    )
    decomposition = SignDecomposition(
        algebra.name or "algebra", algebra.p, list(orthants), direct
    )
    if decomposition.complete and not decomposition.consistent:
        _logger.warning(
            "Sign decomposition of %s disagrees with direct enumeration: "
            "total %d vs %d, mismatched orthants %s",
            decomposition.algebra,
            decomposition.total,
            direct.count,
            [format_sign(e) for e in decomposition.mismatches()],
        )
    return decomposition


def sign_decomposition_report(
    algebra: BasedAlgebra,
    budget: int = DEFAULT_BUDGET,
    threads: int = 1,
) -> SignDecompositionReport:
    return asyncio.run(sign_decomposition_async(algebra, budget, threads)).to_report()


# ---------------------------------------------------------------------------
# Orthant families and the tilting-mutation bijection
# ---------------------------------------------------------------------------


def negative_orthant_families(m: int) -> dict[int, list[SignVector]]:
    """The families ``M_0^-`` (key 0) and ``M_k^-`` for ``3 <= k <= m-1``.

    ``M_0^-`` fixes ``eps(3) = -`` and alternates from vertex 3 on;
    ``M_k^-`` fixes ``eps(k) = eps(k+1) = -`` and alternates from ``k+1`` on.
    Vertices before the constrained range are free. Together they hold
    ``2^(m-1)`` sign vectors and, with their negatives, cover ``{+1,-1}^m``.
    """
    if m < 3:
        raise SiltlabError(f"Orthant families need m >= 3, got {m}")

    def alternating(eps: SignVector, start: int) -> bool:
        # 1-based j in [start, m-1]
        return all(eps[j - 1] != eps[j] for j in range(start, m))

    families: dict[int, list[SignVector]] = {0: [], **{k: [] for k in range(3, m)}}
    for eps in sign_vectors(m):
        if eps[2] < 0 and alternating(eps, 3):
            families[0].append(eps)
        for k in range(3, m):
            if eps[k - 1] < 0 and eps[k] < 0 and alternating(eps, k + 1):
                families[k].append(eps)
    return families


def _restricted_count(
    result: EnumerationResult, vertices: Sequence[int], sign: int
) -> int:
    return sum(
        1 for e in result.orthants if all(e[j - 1] == sign for j in vertices)
    )


async def verify_tilting_bijection_async(
    algebra_a: BasedAlgebra,
    algebra_b: BasedAlgebra,
    vertices: Sequence[int],
    budget: int = DEFAULT_BUDGET,
    threads: int = 1,
) -> BijectionReport:
    """Compare ``A`` negative on ``J`` with ``B`` positive on ``J``.

    ``B`` is the endomorphism algebra of the tilting complex obtained from
    ``A`` by mutating at ``J``; the two counts must agree.
    """
    chosen = sorted(set(vertices))
    for name, alg in (("A", algebra_a), ("B", algebra_b)):
        bad = [j for j in chosen if not 1 <= j <= alg.n]
        if bad:
            raise SiltlabError(f"Vertices {bad} lie outside algebra {name}")
    result_a, result_b = await asyncio.gather(
        Explorer(algebra_a, budget=budget, threads=threads).run(),
        Explorer(algebra_b, budget=budget, threads=threads).run(),
    )
    if not (result_a.complete and result_b.complete):
        _logger.warning("Bijection check ran on incomplete enumerations")
    count_a = _restricted_count(result_a, chosen, -1)
    count_b = _restricted_count(result_b, chosen, 1)
    return BijectionReport(
        a=algebra_a.name,
        b=algebra_b.name,
        j=chosen,
        count_a=count_a,
        count_b=count_b,
        equal=count_a == count_b,
    )


def verify_tilting_bijection(
    algebra_a: BasedAlgebra | str,
    algebra_b: BasedAlgebra | str,
    vertices: Sequence[int],
    p: int = 2,
    budget: int = DEFAULT_BUDGET,
    threads: int = 1,
) -> BijectionReport:
    """Synchronous wrapper; catalog names are resolved at characteristic ``p``."""
    if isinstance(algebra_a, str):
        algebra_a = registry.get_by_spec(algebra_a, p)
    if isinstance(algebra_b, str):
        algebra_b = registry.get_by_spec(algebra_b, p)
    return asyncio.run(
        verify_tilting_bijection_async(algebra_a, algebra_b, vertices, budget, threads)
    )
