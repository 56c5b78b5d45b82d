"""Tests for the algebra catalog."""

import pytest

from siltlab.catalog import families, registry
from siltlab.errors import BadParameter, UnknownAlgebra


class TestLookup:
    """Tests for names, aliases and parameters."""

    def test_list_entries(self):
        """Test that every entry is listed with a description."""
        entries = {e["id"]: e for e in registry.list_entries()}
        for name in ("example23", "A", "D", "Dprime", "B", "muJB", "K4", "N5"):
            assert name in entries
            assert entries[name]["description"]
        assert entries["D"]["params"] == "m >= 3"
        assert entries["K4"]["params"] == ""

    def test_unknown_name(self):
        """Test that unknown names raise UnknownAlgebra, a KeyError."""
        with pytest.raises(UnknownAlgebra, match="Available"):
            registry.get_entry("Z9")
        with pytest.raises(KeyError):
            registry.get("Z9")

    def test_alias(self):
        """Test that aliases resolve to their entry."""
        assert registry.get_entry("twocycle").name == "example23"

    def test_parse_name(self):
        """Test splitting of name:m specs."""
        assert registry.parse_name("D:6") == ("D", 6)
        assert registry.parse_name("K4") == ("K4", None)
        with pytest.raises(BadParameter):
            registry.parse_name("D:x")

    def test_m_too_small(self):
        """Test that family parameters are range checked."""
        with pytest.raises(BadParameter, match="m >= 3"):
            registry.get("D", 2, 2)

    def test_fixed_algebra_takes_no_parameter(self):
        """Test that fixed algebras reject m."""
        with pytest.raises(BadParameter, match="no parameter"):
            registry.get("K4", 2, 4)

    def test_get_by_spec(self):
        """Test building from a spec string."""
        alg = registry.get_by_spec("A:3", 3)
        assert alg.n == 3
        assert alg.p == 3
        assert alg.name == "A3"

    def test_default_prime(self):
        """Test that R4 and H4 default to characteristic 3."""
        assert registry.get("R4").p == 3
        assert registry.get("H4").p == 3
        assert registry.get("K4").p == 2

    def test_expected_counts(self):
        """Test the recorded counts of catalog entries."""
        assert registry.get_entry("A").expected_count(4) == 70
        assert registry.get_entry("D").expected_count(7) == 4012
        assert registry.get_entry("B").expected_count(3) == 32
        assert registry.get_entry("N5").expected_count() is None
        assert not registry.get_entry("N5").expected_complete


class TestDefinitions:
    """Tests for catalog presentations in file form."""

    @pytest.mark.parametrize("name", sorted(registry.CATALOG))
    def test_every_entry_has_a_definition(self, name):
        """Test that every entry can be written in the file format."""
        defn = registry.definition(name)
        assert defn.vertices >= 1

    def test_definition_overrides_prime(self):
        """Test that the prime of a shipped definition can be changed."""
        assert registry.definition("K4", p=3).p == 3


class TestFamilies:
    """Tests for the parameterized families."""

    @pytest.mark.parametrize("m", [3, 4, 5])
    def test_d_family_cartan_symmetric(self, m):
        """Test that D_m is built with a symmetric Cartan matrix."""
        alg = registry.get("D", 2, m)
        cartan = alg.cartan_matrix()
        assert (cartan == cartan.T).all()
        assert alg.check_associative()

    @pytest.mark.parametrize("m", [3, 4, 5])
    def test_dprime_is_smaller(self, m):
        """Test that D'_m is a proper quotient matching its presentation."""
        quotient = registry.get("Dprime", 2, m)
        assert quotient.dimension < registry.get("D", 2, m).dimension
        assert quotient.name == f"Dprime{m}"

    @pytest.mark.parametrize("m", [3, 4, 5, 6])
    def test_muj_b_radical_cube_zero(self, m):
        """Test that B_m tilted at its odd vertices has radical cube zero."""
        alg = registry.get("muJB", 2, m)
        assert alg.radical_power_zero(3)
        assert not alg.radical_power_zero(2)

    def test_tilting_vertices(self):
        """Test the odd vertices used for tilting B_m."""
        assert families.tilting_vertices(7) == [3, 5, 7]

    def test_b_family_is_symmetric(self):
        """Test that B_3 has a symmetric Cartan matrix."""
        cartan = registry.get("B", 2, 3).cartan_matrix()
        assert (cartan == cartan.T).all()

    def test_dprime_generators(self):
        """Test the central generators of D'_5."""
        gens = families.dprime_generators(5)
        assert ("nu3", "mu3") in gens
        assert ("nu4", "mu4") in gens
