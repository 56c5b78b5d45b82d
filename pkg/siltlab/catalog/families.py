"""Parameterized algebra families: presentations built from ``m``.

Arrow names follow one scheme throughout: ``a<i>``/``b<i>`` for the
alpha/beta arrows and ``mu<i>``/``nu<i>`` for the chain ``3 - 4 - ... - m``.
Words compose left to right.
"""

from __future__ import annotations

from collections.abc import Iterator

from siltlab.algebra.based import BasedAlgebra, cartan_matrix, quotient_central
from siltlab.algebra.presentation import algebra_from_presentation
from siltlab.algebra.quiver import Quiver, Relation
from siltlab.errors import BadParameter, SiltlabError
from siltlab.logging import get_logger

_logger = get_logger()

Presentation = tuple[Quiver, list[Relation]]


def _mono(*arrows: str) -> Relation:
    return Relation.of(arrows)


def _diff(left: tuple[str, ...], right: tuple[str, ...]) -> Relation:
    return Relation.of((1, left), (-1, right))


def _require(m: int, least: int, family: str) -> None:
    if m < least:
        raise BadParameter(f"{family} needs m >= {least}, got {m}")


def a_family(m: int) -> Presentation:
    """``A_m``: a line of double arrows, zero relations at the ends of each pair."""
    _require(m, 2, "A_m")
    triples = []
    for i in range(1, m):
        triples += [(f"a{i}", i, i + 1), (f"b{i}", i + 1, i)]
    relations = [_mono("a1", "b1")]
    for i in range(1, m - 1):
        relations += [
            _mono(f"a{i}", f"a{i + 1}"),
            _mono(f"b{i + 1}", f"b{i}"),
            _diff((f"b{i}", f"a{i}"), (f"a{i + 1}", f"b{i + 1}")),
        ]
    return Quiver.from_triples(m, triples), relations


def _d_quiver(m: int, extra: list[tuple[str, int, int]] | None = None) -> Quiver:
    """Vertices 1, 2 both joined to 3, then the chain ``3 - 4 - ... - m``."""
    triples = [("a1", 1, 3), ("b1", 3, 1), ("a2", 2, 3), ("b2", 3, 2)]
    triples += extra or []
    for i in range(3, m):
        triples += [(f"mu{i}", i, i + 1), (f"nu{i}", i + 1, i)]
    return Quiver.from_triples(m, triples)


def _chain_relations(m: int) -> Iterator[Relation]:
    """Relations along the chain, ``3 <= i <= m-2``."""
    for i in range(3, m - 1):
        yield _mono(f"mu{i}", f"mu{i + 1}")
        yield _mono(f"nu{i + 1}", f"nu{i}")
        yield _diff((f"nu{i}", f"mu{i}"), (f"mu{i + 1}", f"nu{i + 1}"))


def _junction_zeros(m: int) -> list[Relation]:
    """Paths entering the chain from 1 or 2, or leaving it towards them."""
    if m < 4:
        return []
    return [
        _mono("a2", "mu3"),
        _mono("a1", "mu3"),
        _mono("nu3", "b2"),
        _mono("nu3", "b1"),
    ]


def d_family(m: int) -> Presentation:
    _require(m, 3, "D_m")
    relations = [
        _mono("a2", "b2"),
        _mono("a1", "b1"),
        _mono("a2", "b1", "a1"),
        _mono("b1", "a1", "b2"),
        *_junction_zeros(m),
    ]
    if m >= 4:
        relations.append(_diff(("mu3", "nu3"), ("b1", "a1")))
    relations += _chain_relations(m)
    return _d_quiver(m), relations


def dprime_generators(m: int) -> list[tuple[str, ...]]:
    """Central elements of ``D_m`` whose ideal gives ``D'_m``."""
    _require(m, 3, "D'_m")
    gens: list[tuple[str, ...]] = [("b1", "a1"), ("a1", "b2", "a2", "b1")]
    gens += [(f"nu{i}", f"mu{i}") for i in range(3, m)]
    return gens


def dprime_family(m: int) -> Presentation:
    """``D'_m`` written out directly; only used to cross-check the quotient."""
    _require(m, 3, "D'_m")
    relations = [
        _mono("a2", "b2"),
        _mono("a1", "b1"),
        _mono("b1", "a1"),
        *_junction_zeros(m),
        _mono("a1", "b2", "a2", "b1"),
    ]
    if m >= 4:
        relations += [
            _diff(("mu3", "nu3"), ("b1", "a1")),
            _mono(f"nu{m - 1}", f"mu{m - 1}"),
        ]
    for i in range(3, m - 1):
        relations += [
            _mono(f"mu{i}", f"mu{i + 1}"),
            _mono(f"nu{i + 1}", f"nu{i}"),
            _mono(f"nu{i}", f"mu{i}"),
            _mono(f"mu{i + 1}", f"nu{i + 1}"),
        ]
    return _d_quiver(m), relations


def dprime_algebra(m: int, p: int, name: str | None = None) -> BasedAlgebra:
    """``D'_m`` as a quotient of ``D_m`` by central elements.

    The result is compared with the directly presented algebra; a mismatch
    in dimension or Cartan matrix raises.
    """
    quiver, relations = d_family(m)
    d_m = algebra_from_presentation(quiver, relations, p, name=f"D{m}")
    quotient = quotient_central(d_m, dprime_generators(m), name=name or f"Dprime{m}")

    direct_quiver, direct_relations = dprime_family(m)
    direct = algebra_from_presentation(direct_quiver, direct_relations, p)
    if quotient.dimension != direct.dimension or (
        cartan_matrix(quotient).tolist() != cartan_matrix(direct).tolist()
    ):
        raise SiltlabError(
            f"D'{m} quotient (dim {quotient.dimension}) disagrees with its "
            f"presentation (dim {direct.dimension})"
        )
    _logger.debug("D'%d: quotient matches presentation, dim %d", m, direct.dimension)
    return quotient


def b_family(m: int) -> Presentation:
    """The symmetric algebra ``B_m`` on the quiver of ``D_m``.

    For ``m = 3`` there is no chain and the two long cycles at vertex 3 are
    identified with each other instead of with ``mu3*nu3``.
    """
    _require(m, 3, "B_m")
    relations = [
        _mono("a2", "b2"),
        _mono("a1", "b1"),
        *_junction_zeros(m),
        _mono("a2", "b1", "a1", "b2", "a2"),
        _mono("a1", "b2", "a2", "b1", "a1"),
    ]
    if m >= 4:
        relations += [
            _diff(("mu3", "nu3"), ("b1", "a1", "b2", "a2")),
            _diff(("mu3", "nu3"), ("b2", "a2", "b1", "a1")),
        ]
    else:
        relations.append(_diff(("b1", "a1", "b2", "a2"), ("b2", "a2", "b1", "a1")))
    relations += _chain_relations(m)
    return _d_quiver(m), relations


def tilting_vertices(m: int) -> list[int]:
    """Odd vertices in ``[3, m]``: where ``B_m`` is mutated."""
    return list(range(3, m + 1, 2))


def muj_b_family(m: int) -> Presentation:
    """Endomorphism algebra of ``B_m`` mutated at :func:`tilting_vertices`.

    Vertices 1 and 2 gain a pair of arrows ``a3: 1 -> 2``, ``b3: 2 -> 1``.
    """
    _require(m, 3, "muJ(B_m)")
    quiver = _d_quiver(m, extra=[("a3", 1, 2), ("b3", 2, 1)])
    relations = [
        _mono("b1", "a3"),
        _mono("a3", "a2"),
        _mono("a2", "b1"),
        _mono("a1", "b2"),
        _mono("b2", "b3"),
        _mono("b3", "a1"),
        *_junction_zeros(m),
        _diff(("a1", "b1"), ("a3", "b3")),
        _diff(("a2", "b2"), ("b3", "a3")),
    ]
    if m >= 4:
        relations.append(_diff(("b1", "a1"), ("mu3", "nu3")))
    relations.append(_diff(("b2", "a2"), ("b1", "a1")))
    relations += _chain_relations(m)
    return quiver, relations
