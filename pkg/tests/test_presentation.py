"""Tests for building algebras from presentations and algebra files."""

import json

import pytest
from pydantic import ValidationError

from siltlab.algebra.based import (
    idempotent_truncation,
    opposite,
    quotient_central,
    semisimple,
)
from siltlab.algebra.fileformat import (
    build_algebra,
    dump_definition,
    load_algebra,
    parse_definition,
)
from siltlab.algebra.presentation import algebra_from_presentation
from siltlab.algebra.quiver import Arrow, Quiver, Relation
from siltlab.errors import NotAdmissible, NotCentral, NotInRadical, SiltlabError

EXAMPLE_YAML = """
name: twocycle
p: 3
vertices: 2
arrows:
  - {name: a, from: 1, to: 2}
  - {name: b, from: 2, to: 1}
relations:
  - [{path: [a, b]}]
  - [{path: [b, a]}]
"""


class TestPresentation:
    """Tests for algebra_from_presentation."""

    def test_example23_dimensions(self, example23):
        """Test that the two-cycle with zero composites has dimension 4."""
        assert example23.dimension == 4
        assert example23.cartan_matrix().tolist() == [[1, 1], [1, 1]]

    def test_path_algebra(self, path_a3):
        """Test that a path algebra without relations keeps every path."""
        assert path_a3.dimension == 5
        assert path_a3.loewy_length() == 2

    def test_a2_dimensions(self, a2):
        """Test that A_2 keeps b1*a1 and kills a1*b1."""
        assert a2.dimension == 5
        assert a2.cartan_matrix().tolist() == [[1, 1], [1, 2]]
        assert a2.loewy_length() == 3

    def test_truncated_polynomial(self):
        """Test that F_p[x]/(x^3) has dimension 3."""
        q = Quiver(1, (Arrow("x", 1, 1),))
        alg = algebra_from_presentation(q, [Relation.of(("x", "x", "x"))], 5)
        assert alg.dimension == 3
        assert alg.loewy_length() == 3

    def test_loop_without_relations_not_admissible(self):
        """Test that an infinite-dimensional quotient is rejected."""
        q = Quiver(1, (Arrow("x", 1, 1),))
        with pytest.raises(NotAdmissible):
            algebra_from_presentation(q, [], 2, length_cap=6)

    def test_structure_constants(self, d3):
        """Test that generated algebras are unital and associative."""
        assert d3.check_unit()
        assert d3.check_associative()

    def test_commutativity_relation(self):
        """Test that a difference relation identifies two paths."""
        q = Quiver.from_triples(
            4, [("a", 1, 2), ("b", 2, 4), ("c", 1, 3), ("d", 3, 4)]
        )
        free = algebra_from_presentation(q, [], 3)
        square = algebra_from_presentation(
            q, [Relation.of((1, ("a", "b")), (-1, ("c", "d")))], 3
        )
        assert free.dimension - square.dimension == 1


class TestConstructions:
    """Tests for opposite algebras, quotients and truncations."""

    def test_opposite_transposes_cartan(self, a2):
        """Test that the opposite algebra has the transposed Cartan matrix."""
        op = opposite(a2)
        assert op.name == f"{a2.name}^op"
        assert op.cartan_matrix().tolist() == a2.cartan_matrix().T.tolist()
        assert op.check_associative()

    def test_opposite_twice(self, d3):
        """Test that taking the opposite twice restores the structure."""
        back = opposite(opposite(d3))
        for key, tensor in d3.tensors.items():
            assert back.tensors[key].tolist() == tensor.tolist()

    def test_truncation(self, d3):
        """Test that eAe keeps the blocks between the chosen vertices."""
        cut = idempotent_truncation(d3, [1, 3])
        cartan = d3.cartan_matrix()
        assert cut.n == 2
        assert cut.cartan_matrix().tolist() == [
            [cartan[0][0], cartan[0][2]],
            [cartan[2][0], cartan[2][2]],
        ]

    def test_truncation_rejects_bad_vertex(self, d3):
        """Test that vertices must lie in range."""
        with pytest.raises(SiltlabError, match="outside"):
            idempotent_truncation(d3, [4])

    def test_quotient_by_central_cycle(self, a2):
        """Test that b1*a1 is central in A_2 and can be factored out."""
        quotient = quotient_central(a2, [("b1", "a1")])
        assert quotient.dimension == a2.dimension - 1
        assert quotient.check_associative()

    def test_quotient_rejects_non_central(self, a2):
        """Test that an arrow is not central."""
        with pytest.raises(NotCentral):
            quotient_central(a2, [("a1",)])

    def test_quotient_rejects_units(self, a2):
        """Test that generators must lie in the radical."""
        with pytest.raises(NotInRadical):
            quotient_central(a2, [a2.unit()])

    def test_semisimple(self):
        """Test that the semisimple algebra has identity Cartan matrix."""
        alg = semisimple(3, 2)
        assert alg.dimension == 3
        assert alg.cartan_matrix().tolist() == [[1, 0, 0], [0, 1, 0], [0, 0, 1]]


class TestAlgebraFiles:
    """Tests for the JSON/YAML algebra file format."""

    def test_parse_yaml(self):
        """Test that a YAML definition builds the expected algebra."""
        defn = parse_definition(EXAMPLE_YAML, "yaml")
        alg = build_algebra(defn)
        assert alg.p == 3
        assert alg.name == "twocycle"
        assert alg.dimension == 4

    def test_override_characteristic(self):
        """Test that the prime can be overridden when building."""
        alg = build_algebra(parse_definition(EXAMPLE_YAML, "yaml"), p=5)
        assert alg.p == 5

    def test_dump_json_uses_aliases(self):
        """Test that dumped arrows use the from/to keys."""
        defn = parse_definition(EXAMPLE_YAML, "yaml")
        data = json.loads(dump_definition(defn))
        assert data["arrows"][0] == {"name": "a", "from": 1, "to": 2}
        assert parse_definition(dump_definition(defn)) == defn

    def test_load_from_file(self, tmp_path):
        """Test loading a definition from a .yaml file."""
        path = tmp_path / "twocycle.yaml"
        path.write_text(EXAMPLE_YAML)
        assert load_algebra(path).dimension == 4

    def test_rejects_composite_prime(self):
        """Test that p must be prime."""
        text = EXAMPLE_YAML.replace("p: 3", "p: 4")
        with pytest.raises(ValidationError, match="prime"):
            parse_definition(text, "yaml")

    def test_rejects_bad_relation(self):
        """Test that relations are checked against the quiver."""
        text = EXAMPLE_YAML.replace("[{path: [b, a]}]", "[{path: [a, a]}]")
        with pytest.raises(ValidationError):
            parse_definition(text, "yaml")
