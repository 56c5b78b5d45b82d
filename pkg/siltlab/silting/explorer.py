"""Enumeration engine: breadth-first exploration of two-term silting objects.

This module provides the programmatic API for enumerations:

    explorer = Explorer(algebra, budget=10_000, threads=4)
    result = await explorer.run()
    print(result.count, result.complete)

    # one-shot convenience from synchronous code:
    result = enumerate_silting(algebra, budget=10_000)

Starting from ``A`` every object is mutated at each summand; each level of
the search is computed in worker threads and merged in frontier order, so
the result does not depend on the number of threads.
"""

from __future__ import annotations

import asyncio
import time
from collections.abc import Callable
from dataclasses import dataclass
from pathlib import Path

import networkx as nx

from siltlab.algebra.based import BasedAlgebra
from siltlab.config import DEFAULT_BUDGET
from siltlab.errors import SiltlabError
from siltlab.logging import get_logger
from siltlab.models.schemas import ComplexRecord, EnumerationReport, SearchConfig
from siltlab.silting.checkpoint import (
    ExplorerCheckpoint,
    create_checkpoint,
    delete_checkpoint,
    save_checkpoint,
)
from siltlab.silting.complexes import GVector, h0_dimension_vector
from siltlab.silting.frontier import Frontier
from siltlab.silting.mutation import (
    HomCalculator,
    LeavesTwoTerm,
    SiltingObject,
    SignVector,
    left_mutation,
    orthant_of,
)

_logger = get_logger()

ProgressCallback = Callable[[int, int], None]


@dataclass
class EnumerationResult:
    """Objects in canonical key order with Hasse arrows between their indices."""

    algebra: str
    p: int
    n: int
    objects: list[SiltingObject]
    hasse: list[tuple[int, int]]
    complete: bool
    mutation_count: int
    dimension_vectors: list[tuple[int, ...]]

    @property
    def count(self) -> int:
        return len(self.objects)

    @property
    def g_vectors(self) -> list[GVector]:
        return [obj.g_vector for obj in self.objects]

    @property
    def orthants(self) -> list[SignVector]:
        return [orthant_of(obj) for obj in self.objects]

    def out_degrees(self) -> list[int]:
        degrees = [0] * self.count
        for a, _ in self.hasse:
            degrees[a] += 1
        return degrees

    def to_graph(self) -> nx.DiGraph:
        """The Hasse quiver, nodes labelled by total g-vector."""
        graph = nx.DiGraph()
        for i, g in enumerate(self.g_vectors):
            graph.add_node(i, g_vector=g)
        graph.add_edges_from(self.hasse)
        return graph

    def to_report(self, with_complexes: bool = False) -> EnumerationReport:
        complexes = None
        if with_complexes:
            complexes = [
                [ComplexRecord(**s.to_record(self.n)) for s in obj.summands]
                for obj in self.objects
            ]
        return EnumerationReport(
            algebra=self.algebra,
            p=self.p,
            count=self.count,
            complete=self.complete,
            mutation_count=self.mutation_count,
            g_vectors=[list(g) for g in self.g_vectors],
            g_matrices=[obj.g_matrix for obj in self.objects],
            orthants=[list(e) for e in self.orthants],
            dimension_vectors=[list(d) for d in self.dimension_vectors],
            hasse=[[a, b] for a, b in self.hasse],
            complexes=complexes,
        )


class Explorer:
    """Level-synchronous BFS over left mutations.

    Flow: frontier -> worker threads (n left mutations each) -> ordered merge
    -> frontier. ``budget`` bounds the number of distinct objects; once it is
    exceeded the run stops with ``complete=False``.
    """

    def __init__(
        self,
        algebra: BasedAlgebra,
        *,
        budget: int = DEFAULT_BUDGET,
        threads: int = 1,
        validate: bool = False,
        checkpoint_interval: int = 0,
        checkpoint_path: str | Path | None = None,
        resume_from: ExplorerCheckpoint | None = None,
        on_progress: ProgressCallback | None = None,
        homs: HomCalculator | None = None,
        config: SearchConfig | None = None,
    ) -> None:
        if config is not None:
            budget = config.budget
            threads = config.threads
            validate = config.validate_objects
            if config.checkpoint is not None:
                checkpoint_path = config.checkpoint
                checkpoint_interval = checkpoint_interval or config.checkpoint_interval
        if budget < 1 or threads < 1:
            raise SiltlabError("budget and threads must both be at least 1")

        self._algebra = algebra
        self._name = algebra.name or "algebra"
        self._budget = budget
        self._threads = threads
        self._validate = validate
        self._homs = homs or HomCalculator(algebra)
        self._on_progress = on_progress

        self._semaphore = asyncio.Semaphore(threads)
        self._shutdown_event = asyncio.Event()
        self._mutation_count = 0

        # Checkpoint support
        self._checkpoint_interval = checkpoint_interval
        self._checkpoint_path = Path(checkpoint_path) if checkpoint_path else None
        self._resume_from = resume_from

        self._stats: dict[str, int] = {
            "levels": 0,
            "objects": 0,
            "mutations": 0,
            "leaves_two_term": 0,
        }
        self._start_time: float = 0.0

    @property
    def algebra(self) -> BasedAlgebra:
        return self._algebra

    @property
    def stats(self) -> dict:
        """Return a snapshot of search statistics.

        Keys: levels, objects, mutations, leaves_two_term, hom_hits,
              hom_misses, elapsed (seconds), objects_per_sec (derived).
        """
        elapsed = time.monotonic() - self._start_time if self._start_time else 0.0
        snapshot = dict(self._stats)
        return {
            **snapshot,
            "hom_hits": self._homs.hits,
            "hom_misses": self._homs.misses,
            "elapsed": elapsed,
            "objects_per_sec": snapshot["objects"] / max(elapsed, 0.1),
        }

    def shutdown(self) -> None:
        """Stop after the current batch; the result is marked incomplete."""
        self._shutdown_event.set()

    async def run(self) -> EnumerationResult:
        """Explore until the frontier empties or the budget is exceeded."""
        self._start_time = time.monotonic()
        n = self._algebra.n
        frontier = Frontier()
        arrows: list[tuple[int, int]] = []

        if self._resume_from is not None:
            self._restore(frontier, arrows, self._resume_from)
        else:
            await frontier.add(self._homs.canonicalize(SiltingObject.regular(n)))
        self._stats["objects"] = len(frontier)

        _logger.info(
            "Enumerating 2-silt of %s (p=%d, n=%d, budget=%d, threads=%d)",
            self._name, self._algebra.p, n, self._budget, self._threads,
        )

        batch = max(4 * self._threads, 1)
        exhausted = False
        levels_since_checkpoint = 0
        while not self._shutdown_event.is_set() and not exhausted:
            level = await frontier.take_level()
            if not level:
                break
            self._stats["levels"] += 1
            _logger.debug(
                "Level %d: expanding %d of %d objects",
                frontier.level, len(level), len(frontier),
            )
            for start in range(0, len(level), batch):
                if self._shutdown_event.is_set():
                    break
                chunk = level[start : start + batch]
                outcomes = await asyncio.gather(
                    *(self._expand(frontier[idx]) for idx in chunk)
                )
                exhausted = await self._merge(frontier, arrows, chunk, outcomes)
                self._report_progress(len(frontier), frontier.pending())
                if exhausted:
                    break

            levels_since_checkpoint += 1
            if (not exhausted
                    and not self._shutdown_event.is_set()
                    and self._checkpoint_interval > 0
                    and levels_since_checkpoint >= self._checkpoint_interval):
                self._save_checkpoint(frontier, arrows)
                levels_since_checkpoint = 0

        complete = not exhausted and not self._shutdown_event.is_set()
        if exhausted:
            _logger.warning(
                "Budget of %d objects exceeded for %s; result is incomplete",
                self._budget, self._name,
            )
        if complete and self._checkpoint_path is not None:
            delete_checkpoint(self._checkpoint_path)
            _logger.debug("Checkpoint deleted (enumeration complete)")

        result = await asyncio.to_thread(
            self._finalize, frontier.objects, arrows, complete
        )
        _logger.info(
            "Enumeration of %s finished: count=%d complete=%s (%.2fs)",
            self._name, result.count, str(result.complete).lower(),
            self.stats["elapsed"],
        )
        return result

    # -- Internal ---------------------------------------------------------

    async def _expand(
        self, obj: SiltingObject
    ) -> list[SiltingObject | LeavesTwoTerm]:
        async with self._semaphore:
            return await asyncio.to_thread(self._mutate_all, obj)

    def _mutate_all(self, obj: SiltingObject) -> list[SiltingObject | LeavesTwoTerm]:
        return [
            left_mutation(self._algebra, obj, k, self._homs, validate=self._validate)
            for k in range(obj.n)
        ]

    async def _merge(
        self,
        frontier: Frontier,
        arrows: list[tuple[int, int]],
        chunk: list[int],
        outcomes: list[list[SiltingObject | LeavesTwoTerm]],
    ) -> bool:
        """Insert children in frontier order; True once the budget is exceeded."""
        for idx, children in zip(chunk, outcomes):
            for child in children:
                self._mutation_count += 1
                self._stats["mutations"] += 1
                if isinstance(child, LeavesTwoTerm):
                    self._stats["leaves_two_term"] += 1
                    continue
                target, _ = await frontier.add(self._homs.canonicalize(child))
                arrows.append((idx, target))
                self._stats["objects"] = len(frontier)
                if len(frontier) > self._budget:
                    return True
        return False

    def _report_progress(self, objects: int, pending: int) -> None:
        if self._on_progress is None:
            return
        try:
            self._on_progress(objects, pending)
        except Exception as exc:
            _logger.error("Progress callback raised an exception (ignored): %s", exc)

    def _restore(
        self,
        frontier: Frontier,
        arrows: list[tuple[int, int]],
        cp: ExplorerCheckpoint,
    ) -> None:
        if cp.algebra != self._name or cp.p != self._algebra.p:
            raise SiltlabError(
                f"Checkpoint belongs to {cp.algebra} (p={cp.p}), "
                f"not {self._name} (p={self._algebra.p})"
            )
        frontier.restore_state(
            {"level": cp.level, "objects": cp.objects, "pending": cp.pending}
        )
        # registers summand representatives in discovery order
        for idx in range(len(frontier)):
            self._homs.canonicalize(frontier[idx])
        arrows.extend((a, b) for a, b in cp.arrows)
        self._mutation_count = cp.mutation_count
        self._stats["mutations"] = cp.mutation_count
        _logger.info(
            "Resumed from checkpoint: %d objects, %d pending at level %d",
            len(frontier), frontier.pending(), cp.level,
        )

    def _save_checkpoint(
        self, frontier: Frontier, arrows: list[tuple[int, int]]
    ) -> None:
        if self._checkpoint_path is None:
            return
        checkpoint = create_checkpoint(
            algebra=self._name,
            p=self._algebra.p,
            frontier_state=frontier.get_state(),
            arrows=arrows,
            mutation_count=self._mutation_count,
        )
        save_checkpoint(self._checkpoint_path, checkpoint)
        _logger.info(
            "Checkpoint saved: %d objects at level %d", len(frontier), frontier.level
        )

    def _finalize(
        self,
        objects: list[SiltingObject],
        arrows: list[tuple[int, int]],
        complete: bool,
    ) -> EnumerationResult:
        """Canonical order: objects sorted by key, arrows remapped and sorted."""
        order = sorted(range(len(objects)), key=lambda i: objects[i].key)
        rank = {old: new for new, old in enumerate(order)}
        ordered = [objects[i] for i in order]
        hasse = sorted({(rank[a], rank[b]) for a, b in arrows})

        n = self._algebra.n
        per_summand: dict[GVector, tuple[int, ...]] = {}
        dims = []
        for obj in ordered:
            total = [0] * n
            for g, summand in zip(obj.key, obj.summands):
                vec = per_summand.get(g)
                if vec is None:
                    vec = per_summand.setdefault(
                        g, h0_dimension_vector(self._algebra, summand)
                    )
                total = [a + b for a, b in zip(total, vec)]
            dims.append(tuple(total))

        return EnumerationResult(
            algebra=self._name,
            p=self._algebra.p,
            n=n,
            objects=ordered,
            hasse=hasse,
            complete=complete,
            mutation_count=self._mutation_count,
            dimension_vectors=dims,
        )


def enumerate_silting(
    algebra: BasedAlgebra,
    budget: int = DEFAULT_BUDGET,
    threads: int = 1,
    *,
    validate: bool = False,
) -> EnumerationResult:
    """One-shot synchronous enumeration.

    Example:
        result = enumerate_silting(algebra, budget=1000)
    """
    explorer = Explorer(algebra, budget=budget, threads=threads, validate=validate)
    return asyncio.run(explorer.run())
