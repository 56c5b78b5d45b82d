"""The quiver of the basic algebra of S(2,r).

Vertex ``v^s`` stands for the partition ``(l1, l2)`` of ``r`` with
``s = l1 - l2``; arrows come in opposite pairs and are found by a digit
recursion in base ``p``.
"""

from __future__ import annotations

from functools import lru_cache

import networkx as nx

from siltlab.algebra.quiver import Arrow, Quiver
from siltlab.errors import BadParameter


def check_prime(p: int) -> None:
    if p < 2 or any(p % d == 0 for d in range(2, int(p**0.5) + 1)):
        raise BadParameter(f"p must be prime, got {p}")


@lru_cache(maxsize=None)
def _arrow_count(s: int, t: int, p: int) -> int:
    s0, s1 = s % p, s // p
    t0, t1 = t % p, t // p
    if p == 2:
        if (s0 == t0 == 1) or (s0 == t0 == 0 and s1 % 2 == t1 % 2):
            return _arrow_count(s1, t1, p)
        if s0 == t0 == 0 and t1 + 1 == s1 and s1 % 2 != 0:
            return 1
        return 0
    if s0 == t0:
        return _arrow_count(s1, t1, p)
    if s0 + t0 == p - 2 and t1 + 1 == s1 and s1 % p != 0:
        return 1
    return 0


def arrow_count(s: int, t: int, p: int) -> int:
    """Number of arrows ``v^s -> v^t`` (0 or 1); symmetric in ``s`` and ``t``."""
    check_prime(p)
    if s < 0 or t < 0:
        raise BadParameter(f"Vertices must be non-negative, got {s}, {t}")
    if s == t:
        return 0
    if s < t:
        s, t = t, s
    return _arrow_count(s, t, p)


def schur_vertices(r: int) -> list[int]:
    """``s`` values of the partitions of ``r`` with at most two parts."""
    if r < 1:
        raise BadParameter(f"r must be at least 1, got {r}")
    return list(range(r % 2, r + 1, 2))


def schur2_edges(r: int, p: int) -> list[tuple[int, int]]:
    """Pairs ``(s, t)`` with ``s < t`` joined by a double arrow."""
    vertices = schur_vertices(r)
    return [
        (s, t)
        for i, s in enumerate(vertices)
        for t in vertices[i + 1 :]
        if arrow_count(t, s, p)
    ]


def schur2_quiver(r: int, p: int) -> Quiver:
    """Quiver on ``v^s`` for increasing ``s``; each edge gives two arrows."""
    check_prime(p)
    vertices = schur_vertices(r)
    index = {s: i + 1 for i, s in enumerate(vertices)}
    arrows: list[Arrow] = []
    for s, t in schur2_edges(r, p):
        arrows.append(Arrow(f"x{s}_{t}", index[s], index[t]))
        arrows.append(Arrow(f"x{t}_{s}", index[t], index[s]))
    return Quiver(
        len(vertices), tuple(arrows), labels=tuple(f"v^{s}" for s in vertices)
    )


def schur2_graph(r: int, p: int) -> nx.Graph:
    """Undirected graph on the ``s`` values."""
    graph = nx.Graph()
    graph.add_nodes_from(schur_vertices(r))
    graph.add_edges_from(schur2_edges(r, p))
    return graph


def schur2_components(r: int, p: int) -> list[list[int]]:
    """Connected components as sorted ``s`` lists, largest first then by ``s``."""
    graph = schur2_graph(r, p)
    components = [sorted(c) for c in nx.connected_components(graph)]
    return sorted(components, key=lambda c: (-len(c), c))
