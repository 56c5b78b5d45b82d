"""Tests for sign decomposition and orthant families."""

from itertools import chain

import pytest

from siltlab.errors import SiltlabError
from siltlab.silting.explorer import enumerate_silting
from siltlab.silting.signs import (
    build_A_epsilon,
    count_in_orthants,
    enumerate_orthant,
    format_sign,
    negate,
    negative_orthant_families,
    parse_sign,
    sign_decomposition_report,
    sign_vectors,
    verify_tilting_bijection,
)


class TestSignVectors:
    """Tests for sign vector helpers."""

    def test_parse_and_format(self):
        """Test conversion between strings and sign tuples."""
        assert parse_sign("+-+") == (1, -1, 1)
        assert format_sign((1, -1, 1)) == "+-+"

    def test_parse_rejects_other_characters(self):
        """Test that only + and - are accepted."""
        with pytest.raises(SiltlabError):
            parse_sign("+0")

    def test_all_sign_vectors(self):
        """Test that all 2^n vectors are listed, all-positive first."""
        signs = sign_vectors(3)
        assert len(set(signs)) == 8
        assert signs[0] == (1, 1, 1)
        assert negate(signs[0]) == (-1, -1, -1)


class TestAEpsilon:
    """Tests for the per-orthant algebra."""

    def test_all_positive_is_semisimple(self, example23):
        """Test that the radical disappears when no vertex is negative."""
        reduced = build_A_epsilon(example23, (1, 1))
        assert reduced.dimension == 2
        assert reduced.name == "example23_++"

    def test_mixed_sign_keeps_one_arrow(self, example23):
        """Test that only the (+, -) block survives off the diagonal."""
        reduced = build_A_epsilon(example23, (1, -1))
        assert reduced.cartan_matrix().tolist() == [[1, 1], [0, 1]]
        assert reduced.check_associative()

    def test_length_checked(self, example23):
        """Test that the sign vector must match the vertex count."""
        with pytest.raises(SiltlabError, match="entries"):
            build_A_epsilon(example23, (1, 1, 1))

    @pytest.mark.parametrize(
        "eps,expected", [((1, 1), 1), ((1, -1), 2), ((-1, 1), 2), ((-1, -1), 1)]
    )
    def test_orthant_counts(self, example23, eps, expected):
        """Test the per-orthant counts of the two-cycle algebra."""
        orthant = enumerate_orthant(example23, eps, budget=100)
        assert orthant.complete
        assert orthant.count == expected


class TestDecomposition:
    """Tests for the full sign decomposition."""

    def test_example23(self, example23):
        """Test that per-orthant counts add up to the direct count."""
        report = sign_decomposition_report(example23, budget=100)
        assert report.total == 6
        assert report.direct == 6
        assert report.complete
        assert report.consistent
        assert [row.count for row in report.orthants] == [1, 2, 2, 1]

    @pytest.mark.parametrize("name", ["d3", "path_a3"])
    def test_consistent(self, request, name):
        """Test consistency on three-vertex algebras."""
        algebra = request.getfixturevalue(name)
        report = sign_decomposition_report(algebra, budget=1000, threads=2)
        assert report.consistent
        assert len(report.orthants) == 8

    def test_count_in_orthants(self, example23):
        """Test counting objects over a set of orthants."""
        result = enumerate_silting(example23, budget=100)
        assert count_in_orthants(result, [(1, -1), (-1, 1)]) == 4


class TestOrthantFamilies:
    """Tests for the negative orthant families and the tilting bijection."""

    @pytest.mark.parametrize("m", [3, 4, 5, 6])
    def test_families_cover_half(self, m):
        """Test that the families hold 2^(m-1) disjoint sign vectors."""
        families = negative_orthant_families(m)
        members = list(chain.from_iterable(families.values()))
        assert len(members) == 2 ** (m - 1)
        assert len(set(members)) == len(members)
        assert set(members) | {negate(e) for e in members} == set(sign_vectors(m))

    def test_family_keys(self):
        """Test that M_0 and M_3 .. M_{m-1} are returned."""
        assert sorted(negative_orthant_families(5)) == [0, 3, 4]

    def test_family_needs_three_vertices(self):
        """Test that m must be at least 3."""
        with pytest.raises(SiltlabError):
            negative_orthant_families(2)

    def test_tilting_bijection(self):
        """Test the bijection between pathA3 and its mutation at 1 and 3."""
        report = verify_tilting_bijection("pathA3", "muJ_pathA3", [1, 3])
        assert report.equal
        assert report.count_a == report.count_b == 6
        assert report.j == [1, 3]

    def test_bijection_vertex_range(self):
        """Test that vertices outside the algebra are rejected."""
        with pytest.raises(SiltlabError, match="outside"):
            verify_tilting_bijection("pathA3", "muJ_pathA3", [4])
