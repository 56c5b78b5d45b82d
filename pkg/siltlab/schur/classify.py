"""Tau-tilting finiteness of Schur algebras S(n,r).

For ``n = 2`` the verdict is read off the blocks of the generated quiver,
each classified by its number of vertices. For ``n >= 3`` the finite cases
are a fixed list; ``S(n,r)`` is Morita equivalent to ``S(r,r)`` when
``n >= r``, so lookups use ``min(n, r)``.
"""

from __future__ import annotations

from math import comb, prod

from siltlab.algebra.quiver import Quiver, detect_tau_infinite_square
from siltlab.catalog import registry
from siltlab.config import DEFAULT_BUDGET
from siltlab.errors import BadParameter
from siltlab.logging import get_logger
from siltlab.models.schemas import (
    BlockReport,
    Classification,
    MoritaClass,
    RepresentationType,
    SchurBlockReport,
)
from siltlab.schur.cache import CountCache
from siltlab.schur.quiver import check_prime, schur2_components, schur2_edges
from siltlab.silting.explorer import enumerate_silting

_logger = get_logger()

INFINITE = "INFINITE"

# Two-term silting counts of the fixed blocks.
KNOWN_COUNTS: dict[str, int] = {
    "F": 2,
    "K4": 136,
    "L5": 1656,
    "M4": 152,
    "U4": 136,
    "R4": 88,
    "H4": 96,
}

# Basic algebras of S(k,r), k = min(n,r) >= 3, keyed by (p, k, r).
_HIGHER_RANK_BLOCKS: dict[tuple[int, int, int], list[MoritaClass]] = {
    (2, 3, 3): ["A2", "F"],
    (2, 3, 4): ["M4"],
    (2, 3, 5): ["U4"],
    (2, 4, 5): ["U4", "A2"],
    (2, 5, 5): ["N5", "A2"],
    (3, 3, 3): ["A3"],
    (3, 3, 4): ["A2", "F", "F"],
    (3, 3, 5): ["A2", "A2", "F"],
    (3, 3, 7): ["R4", "A2", "A2"],
    (3, 3, 8): ["R4", "H4", "A2"],
    (3, 4, 4): ["A3", "F", "F"],
    (3, 4, 5): ["A3", "A2", "F"],
    (3, 5, 5): ["A3", "A3", "F"],
}


def _check_args(n: int, r: int, p: int) -> None:
    if n < 2:
        raise BadParameter(f"n must be at least 2, got {n}")
    if r < 1:
        raise BadParameter(f"r must be at least 1, got {r}")
    check_prime(p)


def partition_count(r: int, n: int) -> int:
    """Partitions of ``r`` into at most ``n`` parts."""
    # ways[j]: partitions of j with parts of size <= n (conjugate count)
    ways = [1] + [0] * r
    for part in range(1, n + 1):
        for j in range(part, r + 1):
            ways[j] += ways[j - part]
    return ways[r]


def representation_type(n: int, r: int, p: int) -> RepresentationType:
    """Representation type of ``S(n,r)`` over a field of characteristic ``p``."""
    _check_args(n, r, p)
    if p > r or (p == 2 and n == 2 and r == 3):
        return "SEMISIMPLE"
    if (
        (p == 2 and n == 2 and r in (5, 7))
        or (n == 2 and r < p * p)
        or (n >= 3 and r < 2 * p)
    ):
        return "FINITE"
    if (
        (p == 2 and n == 2 and r in (4, 9, 11))
        or (p == 3 and n == 2 and r in (9, 10, 11))
        or (p == 3 and n == 3 and r in (7, 8))
    ):
        return "TAME"
    return "WILD"


def block_class(size: int, p: int) -> MoritaClass:
    """Morita class of a block of S(2,r) with ``size`` simple modules."""
    if size == 1:
        return "F"
    if p == 2:
        return {2: "A2", 3: "D3", 4: "K4", 5: "L5"}.get(size, INFINITE)
    if size <= p:
        return f"A{size}"
    if size == p + 1:
        return f"D{size}"
    return INFINITE


class BlockCounter:
    """Two-term silting counts of named blocks.

    Known counts come from a built-in table; ``D_m`` counts missing from it
    are read from ``cache`` or, with ``compute`` set, enumerated and stored.
    """

    def __init__(
        self,
        cache: CountCache | None = None,
        compute: bool = False,
        budget: int = DEFAULT_BUDGET,
        threads: int = 1,
    ):
        self.cache = cache
        self.compute = compute
        self.budget = budget
        self.threads = threads

    def count(self, block: MoritaClass, p: int) -> int | None:
        if block == INFINITE:
            return None
        if block in KNOWN_COUNTS:
            return KNOWN_COUNTS[block]
        family, m = block[:1], block[1:]
        if not m.isdigit():
            return None
        if family == "A":
            return comb(2 * int(m), int(m))
        if family != "D":
            return None
        if int(m) in registry.D_COUNTS:
            return registry.D_COUNTS[int(m)]
        return self._cached_or_computed(block, int(m), p)

    def _cached_or_computed(self, block: str, m: int, p: int) -> int | None:
        if self.cache is not None:
            entry = self.cache.get(block, p)
            if entry is not None and entry.complete:
                _logger.info(
                    "Block count cache hit: %s p=%d -> %d", block, p, entry.count
                )
                return entry.count
        if not self.compute:
            return None
        _logger.info("Enumerating %s over p=%d for its block count", block, p)
        result = enumerate_silting(
            registry.get("D", p, m), budget=self.budget, threads=self.threads
        )
        if not result.complete:
            _logger.warning(
                "Budget exhausted while counting %s (%d objects)", block, result.count
            )
            return None
        if self.cache is not None:
            self.cache.put(block, p, result.count)
        return result.count


def _block_quiver(block: list[int], edges: list[tuple[int, int]]) -> Quiver:
    index = {s: i + 1 for i, s in enumerate(block)}
    triples = []
    for s, t in edges:
        if s in index and t in index:
            triples += [
                (f"x{s}_{t}", index[s], index[t]),
                (f"x{t}_{s}", index[t], index[s]),
            ]
    return Quiver.from_triples(len(block), triples)


def schur2_blocks(
    r: int, p: int, counter: BlockCounter | None = None
) -> SchurBlockReport:
    """Blocks of the basic algebra of S(2,r), largest first."""
    _check_args(2, r, p)
    counter = counter or BlockCounter()
    edges = schur2_edges(r, p)
    blocks = []
    for component in schur2_components(r, p):
        morita = block_class(len(component), p)
        finite = morita != INFINITE
        has_square = detect_tau_infinite_square(_block_quiver(component, edges))
        if not finite and not has_square:
            _logger.warning(
                "S(2,%d) p=%d: block %s has %d vertices but no square subquiver",
                r, p, component, len(component),
            )
        blocks.append(
            BlockReport(
                vertices=component,
                size=len(component),
                morita_class=morita,
                finite=finite,
                count=counter.count(morita, p) if finite else None,
                has_square=has_square,
            )
        )
    total_finite = all(b.finite for b in blocks)
    counts = [b.count for b in blocks]
    total_count = None
    if total_finite and all(c is not None for c in counts):
        total_count = prod(c for c in counts if c is not None)
    return SchurBlockReport(
        r=r, p=p, blocks=blocks, total_finite=total_finite, total_count=total_count
    )


def _higher_rank_finite(n: int, r: int, p: int) -> bool:
    if p == 2:
        return (
            (n == 3 and r <= 5)
            or (n == 4 and r in (1, 2, 3, 5))
            or (n >= 5 and r <= 3)
        )
    if p == 3:
        return (n == 3 and (r <= 5 or r in (7, 8))) or (n >= 4 and r <= 5)
    return r <= 2 * p - 1


def classify(
    n: int, r: int, p: int, counter: BlockCounter | None = None
) -> Classification:
    """Decide whether ``S(n,r)`` is tau-tilting finite and count if possible.

    Raises:
        BadParameter: If ``n < 2``, ``r < 1`` or ``p`` is not prime.
    """
    _check_args(n, r, p)
    rep_type = representation_type(n, r, p)
    k = min(n, r)

    if k <= 2:
        report = schur2_blocks(r, p, counter)
        note = None
        if report.total_finite and report.total_count is None:
            note = "finite, count undetermined"
        return Classification(
            n=n,
            r=r,
            p=p,
            finite=report.total_finite,
            basic_algebra=[b.morita_class for b in report.blocks],
            count=report.total_count,
            representation_type=rep_type,
            note=note,
        )

    finite = _higher_rank_finite(n, r, p)
    basic: list[MoritaClass] | None = _HIGHER_RANK_BLOCKS.get((p, k, r))
    count = None
    note = None
    if rep_type == "SEMISIMPLE":
        basic = ["F"] * partition_count(r, n)
    if finite and basic is not None:
        counter = counter or BlockCounter()
        counts = [counter.count(block, p) for block in basic]
        if all(c is not None for c in counts):
            count = prod(c for c in counts if c is not None)
    if finite and count is None:
        note = "finite, count undetermined"
    return Classification(
        n=n,
        r=r,
        p=p,
        finite=finite,
        basic_algebra=basic,
        count=count,
        representation_type=rep_type,
        note=note,
    )
