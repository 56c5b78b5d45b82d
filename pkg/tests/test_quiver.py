"""Tests for quivers and relations."""

import pytest

from siltlab.algebra.quiver import (
    Arrow,
    Quiver,
    Relation,
    detect_tau_infinite_square,
)
from siltlab.errors import PresentationError


def _double_cycle(n: int) -> Quiver:
    triples = []
    for i in range(1, n + 1):
        j = i % n + 1
        triples += [(f"x{i}", i, j), (f"y{i}", j, i)]
    return Quiver.from_triples(n, triples)


class TestQuiverValidation:
    """Tests for quiver construction."""

    def test_duplicate_arrow_name(self):
        """Test that arrow names must be unique."""
        with pytest.raises(PresentationError, match="Duplicate"):
            Quiver(2, (Arrow("a", 1, 2), Arrow("a", 2, 1)))

    def test_vertex_out_of_range(self):
        """Test that arrows must stay inside 1..n."""
        with pytest.raises(PresentationError, match="outside"):
            Quiver(2, (Arrow("a", 1, 3),))

    def test_label_count_mismatch(self):
        """Test that vertex labels must match the vertex count."""
        with pytest.raises(PresentationError):
            Quiver(2, (), labels=("v^0",))

    def test_empty_quiver_rejected(self):
        """Test that a quiver needs a vertex."""
        with pytest.raises(PresentationError):
            Quiver(0)


class TestRelations:
    """Tests for relation parsing and checks."""

    def test_relation_str(self):
        """Test that relations render as signed sums of words."""
        rel = Relation.of((1, ("a", "b")), (-1, ("c", "d")))
        assert str(rel) == "a*b - c*d"

    def test_monomial(self):
        """Test that a single-term relation is monomial."""
        assert Relation.of(("a", "b")).is_monomial

    def test_check_relation_endpoints(self):
        """Test that a valid relation reports its endpoints."""
        q = Quiver.from_triples(2, [("a", 1, 2), ("b", 2, 1)])
        assert q.check_relation(Relation.of(("a", "b"))) == (1, 1)

    def test_relation_must_compose(self):
        """Test that a broken path is rejected."""
        q = Quiver.from_triples(2, [("a", 1, 2), ("b", 2, 1)])
        with pytest.raises(PresentationError, match="does not compose"):
            q.check_relation(Relation.of(("a", "a")))

    def test_relation_terms_must_be_parallel(self):
        """Test that all terms share their endpoints."""
        q = Quiver.from_triples(2, [("a", 1, 2), ("b", 2, 1)])
        with pytest.raises(PresentationError, match="mixes endpoints"):
            q.check_relation(Relation.of(("a", "b"), ("b", "a")))

    def test_relation_terms_need_length_two(self):
        """Test that relations must lie in the square of the arrow ideal."""
        q = Quiver.from_triples(2, [("a", 1, 2)])
        with pytest.raises(PresentationError, match="length < 2"):
            q.check_relation(Relation.of(("a",)))

    def test_unknown_arrow(self):
        """Test that words may only use known arrows."""
        q = Quiver.from_triples(2, [("a", 1, 2)])
        with pytest.raises(PresentationError, match="Unknown arrow"):
            q.endpoints(("a", "z"))


class TestGraphs:
    """Tests for graph views and the square test."""

    def test_double_arrow_graph(self):
        """Test that only pairs of opposite arrows become edges."""
        q = Quiver.from_triples(3, [("a", 1, 2), ("b", 2, 1), ("c", 2, 3)])
        graph = q.double_arrow_graph()
        assert set(graph.edges) == {(1, 2)}
        assert q.underlying_graph().number_of_edges() == 2

    def test_square_of_double_arrows(self):
        """Test that a 4-cycle of double arrows is detected."""
        assert detect_tau_infinite_square(_double_cycle(4))

    def test_triangle_has_no_square(self):
        """Test that three vertices never form a square."""
        assert not detect_tau_infinite_square(_double_cycle(3))

    def test_line_has_no_square(self):
        """Test that a line of double arrows has no square."""
        q = Quiver.from_triples(
            4,
            [(f"a{i}", i, i + 1) for i in range(1, 4)]
            + [(f"b{i}", i + 1, i) for i in range(1, 4)],
        )
        assert not detect_tau_infinite_square(q)
