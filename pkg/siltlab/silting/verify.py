"""Property checks run against a finished enumeration."""

from __future__ import annotations

import asyncio
from collections import Counter
from collections.abc import Callable, Mapping
from dataclasses import dataclass, field

import networkx as nx

from siltlab.algebra.based import BasedAlgebra, opposite
from siltlab.algebra.field import integer_determinant
from siltlab.config import DEFAULT_BUDGET
from siltlab.logging import get_logger
from siltlab.silting.explorer import EnumerationResult, Explorer
from siltlab.silting.homotopy import is_two_term_silting
from siltlab.silting.mutation import SignVector, SiltingObject
from siltlab.silting.signs import (
    MAX_SIGN_VERTICES,
    OrthantCount,
    count_in_orthants,
    enumerate_orthant_async,
    format_sign,
    sign_vectors,
)

_logger = get_logger()


@dataclass
class CheckResult:
    """Outcome of one property check; ``counterexample`` is the first failure."""

    name: str
    passed: bool
    counterexample: str | None = None


@dataclass
class VerificationReport:
    algebra: str
    count: int
    complete: bool
    checks: list[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.complete and all(c.passed for c in self.checks)

    def first_failure(self) -> CheckResult | None:
        return next((c for c in self.checks if not c.passed), None)


def check_silting(algebra: BasedAlgebra, result: EnumerationResult) -> CheckResult:
    """Every object is two-term silting and its g-matrix is unimodular."""
    for obj in result.objects:
        if not is_two_term_silting(algebra, obj.summands):
            return CheckResult("silting", False, f"not silting: {obj.key}")
        det = integer_determinant(obj.g_matrix)
        if abs(det) != 1:
            return CheckResult("silting", False, f"det {det}: {obj.key}")
    return CheckResult("silting", True)


def check_injective(result: EnumerationResult) -> CheckResult:
    """Distinct objects have distinct total g-vectors."""
    seen: dict[tuple[int, ...], int] = {}
    for i, g in enumerate(result.g_vectors):
        if g in seen:
            return CheckResult(
                "g-vector injectivity", False, f"objects {seen[g]} and {i} share {g}"
            )
        seen[g] = i
    return CheckResult("g-vector injectivity", True)


def check_orthants(
    result: EnumerationResult, expected: Mapping[SignVector, int] | None = None
) -> CheckResult:
    """Orthant counts add up to the total and agree with ``expected``.

    ``expected`` maps each sign vector to the count read off ``A_eps``.
    """
    name = "orthant partition"
    histogram = Counter(result.orthants)
    for g, eps in zip(result.g_vectors, result.orthants):
        if len(eps) != result.n or 0 in eps:
            return CheckResult(name, False, f"{g} meets a wall")
    covered = count_in_orthants(result, sign_vectors(result.n))
    if covered != result.count:
        return CheckResult(
            name, False, f"orthants hold {covered} of {result.count} objects"
        )
    if expected is not None:
        for eps in sign_vectors(result.n):
            if histogram[eps] != expected.get(eps, 0):
                return CheckResult(
                    name,
                    False,
                    f"orthant {format_sign(eps)} has {histogram[eps]} objects, "
                    f"A_eps gives {expected.get(eps, 0)}",
                )
    return CheckResult(name, True)


def check_hasse(result: EnumerationResult) -> CheckResult:
    """Every arrow replaces exactly one summand."""
    for a, b in result.hasse:
        source, target = result.objects[a].key, result.objects[b].key
        if len(set(source) - set(target)) != 1:
            return CheckResult("hasse arrows", False, f"{source} -> {target}")
    return CheckResult("hasse arrows", True)


def check_hasse_shape(result: EnumerationResult) -> CheckResult:
    """The quiver is connected, with sole source ``A`` and sole sink ``A[1]``.

    An incomplete run has unexpanded leaves, so only the source is checked.
    """
    name = "hasse shape"
    if not result.objects:
        return CheckResult(name, False, "no objects")
    graph = result.to_graph()
    if not nx.is_weakly_connected(graph):
        parts = nx.number_weakly_connected_components(graph)
        return CheckResult(name, False, f"{parts} connected components")
    sources = [v for v, degree in graph.in_degree() if degree == 0]
    keys = [obj.key for obj in result.objects]
    if [keys[v] for v in sources] != [SiltingObject.regular(result.n).key]:
        found = [result.g_vectors[v] for v in sources]
        return CheckResult(name, False, f"sources with g-vectors {found}")
    if not result.complete:
        return CheckResult(name, True)
    sinks = [v for v, degree in graph.out_degree() if degree == 0]
    if [keys[v] for v in sinks] != [SiltingObject.shifted(result.n).key]:
        found = [result.g_vectors[v] for v in sinks]
        return CheckResult(name, False, f"sinks with g-vectors {found}")
    return CheckResult(name, True)


def check_duality(result: EnumerationResult, dual: EnumerationResult) -> CheckResult:
    """g-vectors of the opposite algebra are the negatives of those of ``A``."""
    mine = set(result.g_vectors)
    negated = {tuple(-x for x in g) for g in dual.g_vectors}
    if mine == negated:
        return CheckResult("duality", True)
    diff = sorted(mine ^ negated)
    return CheckResult("duality", False, f"unmatched g-vector {diff[0]}")


_RESULT_CHECKS: list[Callable[[EnumerationResult], CheckResult]] = [
    check_injective,
    check_hasse,
    check_hasse_shape,
]


async def _orthant_counts(
    algebra: BasedAlgebra, budget: int, threads: int
) -> dict[SignVector, int] | None:
    """Per-orthant counts through ``A_eps``; None when any run is cut short."""
    if algebra.n > MAX_SIGN_VERTICES:
        _logger.warning(
            "Skipping A_eps orthant counts: %d vertices exceed %d",
            algebra.n,
            MAX_SIGN_VERTICES,
        )
        return None
    gate = asyncio.Semaphore(threads)

    async def one(eps: SignVector) -> OrthantCount:
        async with gate:
            return await enumerate_orthant_async(algebra, eps, budget, threads=1)

    counts = await asyncio.gather(*(one(eps) for eps in sign_vectors(algebra.n)))
    if not all(c.complete for c in counts):
        _logger.warning("Skipping A_eps orthant counts: enumeration incomplete")
        return None
    return {c.sign: c.count for c in counts}


async def verify_algebra_async(
    algebra: BasedAlgebra,
    budget: int = DEFAULT_BUDGET,
    threads: int = 1,
) -> VerificationReport:
    """Enumerate ``A`` and its opposite, then run every property check.

    Complete runs also have their orthant counts compared with ``A_eps``.
    """
    result, dual = await asyncio.gather(
        Explorer(algebra, budget=budget, threads=threads).run(),
        Explorer(opposite(algebra), budget=budget, threads=threads).run(),
    )
    report = VerificationReport(result.algebra, result.count, result.complete)
    report.checks.append(check_silting(algebra, result))
    report.checks.extend(check(result) for check in _RESULT_CHECKS)
    expected = None
    if result.complete:
        expected = await _orthant_counts(algebra, budget, threads)
    report.checks.append(check_orthants(result, expected))
    if dual.complete and result.complete:
        report.checks.append(check_duality(result, dual))
    else:
        _logger.warning("Skipping duality check: enumeration incomplete")
    failure = report.first_failure()
    if failure is not None:
        _logger.warning(
            "%s failed %s: %s", report.algebra, failure.name, failure.counterexample
        )
    return report


def verify_algebra(
    algebra: BasedAlgebra,
    budget: int = DEFAULT_BUDGET,
    threads: int = 1,
) -> VerificationReport:
    return asyncio.run(verify_algebra_async(algebra, budget, threads))
