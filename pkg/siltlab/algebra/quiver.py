"""Quivers, path words and relations.

Vertices are labelled ``1..n`` as in presentations. Paths compose left to
right: the word ``("a1", "b1")`` traverses ``a1`` and then ``b1``.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from itertools import combinations

import networkx as nx

from siltlab.errors import PresentationError


@dataclass(frozen=True)
class Arrow:
    """A named arrow ``source -> target``."""

    name: str
    source: int
    target: int


@dataclass(frozen=True)
class PathWord:
    """A path given by its start vertex and arrow names (possibly empty)."""

    start: int
    arrows: tuple[str, ...] = ()

    def __len__(self) -> int:
        return len(self.arrows)

    def label(self) -> str:
        return "*".join(self.arrows) if self.arrows else f"e{self.start}"


@dataclass(frozen=True)
class Relation:
    """A linear combination of parallel paths, stored as ``(coeff, word)`` terms."""

    terms: tuple[tuple[int, tuple[str, ...]], ...]

    @classmethod
    def of(cls, *terms: tuple[int, Sequence[str]] | Sequence[str]) -> Relation:
        """Build from words (coefficient 1) or ``(coeff, word)`` pairs."""
        parsed: list[tuple[int, tuple[str, ...]]] = []
        for term in terms:
            if (
                isinstance(term, tuple)
                and len(term) == 2
                and isinstance(term[0], int)
            ):
                parsed.append((term[0], tuple(term[1])))  # type: ignore[arg-type]
            else:
                parsed.append((1, tuple(term)))  # type: ignore[arg-type]
        return cls(tuple(parsed))

    @property
    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def __str__(self) -> str:
        parts = []
        for coeff, word in self.terms:
            text = "*".join(word)
            if coeff == 1:
                parts.append(text)
            elif coeff == -1:
                parts.append(f"-{text}")
            else:
                parts.append(f"{coeff}{text}")
        return " + ".join(parts).replace("+ -", "- ")


@dataclass(frozen=True)
class Quiver:
    """A finite quiver on vertices ``1..n``.

    ``labels`` optionally names vertices for display (e.g. ``v^4``).
    """

    n: int
    arrows: tuple[Arrow, ...] = ()
    labels: tuple[str, ...] | None = field(default=None, compare=False)

    def __post_init__(self) -> None:
        if self.n < 1:
            raise PresentationError(f"Quiver needs at least one vertex, got {self.n}")
        seen: set[str] = set()
        for arrow in self.arrows:
            if arrow.name in seen:
                raise PresentationError(f"Duplicate arrow name '{arrow.name}'")
            seen.add(arrow.name)
            for v in (arrow.source, arrow.target):
                if not 1 <= v <= self.n:
                    raise PresentationError(
                        f"Arrow '{arrow.name}' uses vertex {v} outside 1..{self.n}"
                    )
        if self.labels is not None and len(self.labels) != self.n:
            raise PresentationError("Vertex labels must match the vertex count")

    @classmethod
    def from_triples(
        cls, n: int, triples: Iterable[tuple[str, int, int]]
    ) -> Quiver:
        return cls(n, tuple(Arrow(name, s, t) for name, s, t in triples))

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    def arrow(self, name: str) -> Arrow:
        for arrow in self.arrows:
            if arrow.name == name:
                return arrow
        raise PresentationError(f"Unknown arrow '{name}'")

    def arrow_map(self) -> dict[str, Arrow]:
        return {a.name: a for a in self.arrows}

    def has_loops(self) -> bool:
        return any(a.source == a.target for a in self.arrows)

    def endpoints(self, word: Sequence[str]) -> tuple[int, int]:
        """Source and target of a nonempty word; raises on a broken path."""
        if not word:
            raise PresentationError("Empty word has no endpoints")
        by_name = self.arrow_map()
        try:
            steps = [by_name[name] for name in word]
        except KeyError as exc:
            raise PresentationError(f"Unknown arrow {exc.args[0]!r} in {word}") from exc
        for prev, curr in zip(steps, steps[1:]):
            if prev.target != curr.source:
                raise PresentationError(
                    f"Path {'*'.join(word)} does not compose at "
                    f"{prev.name} -> {curr.name}"
                )
        return steps[0].source, steps[-1].target

    def check_relation(self, rel: Relation) -> tuple[int, int]:
        """Validate parallelism and length of a relation; return its endpoints."""
        if not rel.terms:
            raise PresentationError("Relation has no terms")
        ends = None
        for _, word in rel.terms:
            if len(word) < 2:
                raise PresentationError(
                    f"Relation term {'*'.join(word) or '<empty>'} has length < 2"
                )
            here = self.endpoints(word)
            if ends is None:
                ends = here
            elif here != ends:
                raise PresentationError(
                    f"Relation {rel} mixes endpoints {ends}, {here}"
                )
        assert ends is not None
        return ends

    def to_graph(self) -> nx.MultiDiGraph:
        graph = nx.MultiDiGraph()
        graph.add_nodes_from(self.vertices)
        for arrow in self.arrows:
            graph.add_edge(arrow.source, arrow.target, key=arrow.name)
        return graph

    def double_arrow_graph(self) -> nx.Graph:
        """Undirected graph with an edge wherever arrows run both ways."""
        forward = {(a.source, a.target) for a in self.arrows if a.source != a.target}
        graph = nx.Graph()
        graph.add_nodes_from(self.vertices)
        graph.add_edges_from((s, t) for s, t in forward if (t, s) in forward)
        return graph

    def underlying_graph(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(self.vertices)
        graph.add_edges_from(
            (a.source, a.target) for a in self.arrows if a.source != a.target
        )
        return graph


def detect_tau_infinite_square(quiver: Quiver) -> bool:
    """True iff four distinct vertices form a cycle of double arrows.

    Such a square subquiver forces infinitely many support tau-tilting
    modules.
    """
    graph = quiver.double_arrow_graph()
    for a, c in combinations(graph.nodes, 2):
        if len(list(nx.common_neighbors(graph, a, c))) >= 2:
            return True
    return False
