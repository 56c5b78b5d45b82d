"""Tests for property checks on finished enumerations."""

from dataclasses import replace

import pytest

from siltlab.silting.complexes import TwoTermComplex
from siltlab.silting.explorer import enumerate_silting
from siltlab.silting.mutation import SiltingObject
from siltlab.silting.verify import (
    check_duality,
    check_hasse,
    check_hasse_shape,
    check_injective,
    check_orthants,
    check_silting,
    verify_algebra,
)

EXAMPLE23_ORTHANTS = {(1, 1): 1, (1, -1): 2, (-1, 1): 2, (-1, -1): 1}


@pytest.fixture(scope="module")
def a2_result(a2):
    """Complete enumeration of A_2."""
    return enumerate_silting(a2, budget=100)


@pytest.fixture(scope="module")
def example23_result(example23):
    """Complete enumeration of the two-cycle with zero composites."""
    return enumerate_silting(example23, budget=100)


class TestChecks:
    """Tests for individual checks."""

    def test_all_checks_pass(self, a2, a2_result):
        """Test that a correct enumeration passes every check."""
        assert check_silting(a2, a2_result).passed
        assert check_injective(a2_result).passed
        assert check_orthants(a2_result).passed
        assert check_hasse(a2_result).passed
        assert check_hasse_shape(a2_result).passed

    def test_duplicate_g_vector_detected(self, a2_result):
        """Test that a repeated object breaks injectivity."""
        broken = replace(a2_result, objects=a2_result.objects + a2_result.objects[:1])
        result = check_injective(broken)
        assert not result.passed
        assert "share" in result.counterexample

    def test_bad_arrow_detected(self, a2_result):
        """Test that an arrow between unrelated objects is flagged."""
        top = a2_result.g_vectors.index((1, 1))
        bottom = a2_result.g_vectors.index((-1, -1))
        broken = replace(a2_result, hasse=[(top, bottom)])
        assert not check_hasse(broken).passed

    def test_duality_mismatch(self, a2_result, example23):
        """Test that unrelated algebras fail the duality check."""
        other = enumerate_silting(example23, budget=100)
        shifted = replace(
            other, objects=other.objects[:-1], dimension_vectors=[]
        )
        assert not check_duality(a2_result, shifted).passed


class TestHasseShape:
    """Tests for connectivity and the unique source and sink."""

    def test_hexagon_passes(self, example23_result):
        """Test that the complete quiver of example23 has the expected shape."""
        assert check_hasse_shape(example23_result).passed

    def test_missing_arrows_detected(self, example23_result):
        """Test that a quiver without arrows is disconnected."""
        broken = replace(example23_result, hasse=[])
        result = check_hasse_shape(broken)
        assert not result.passed
        assert "6 connected components" in result.counterexample

    def test_second_source_detected(self, example23_result):
        """Test that turning the arrows out of A around leaves two sources."""
        top = example23_result.g_vectors.index((1, 1))
        broken = replace(
            example23_result,
            hasse=[(a, b) for a, b in example23_result.hasse if a != top]
            + [(b, a) for a, b in example23_result.hasse if a == top],
        )
        result = check_hasse_shape(broken)
        assert not result.passed
        assert "sources" in result.counterexample

    def test_reversed_quiver_detected(self, example23_result):
        """Test that swapping source and sink is caught."""
        broken = replace(
            example23_result, hasse=[(b, a) for a, b in example23_result.hasse]
        )
        assert not check_hasse_shape(broken).passed

    def test_dropped_sink_detected(self, example23_result):
        """Test that a complete run must contain A[1]."""
        bottom = example23_result.g_vectors.index((-1, -1))
        keep = [i for i in range(example23_result.count) if i != bottom]
        renumber = {old: new for new, old in enumerate(keep)}
        broken = replace(
            example23_result,
            objects=[example23_result.objects[i] for i in keep],
            hasse=[
                (renumber[a], renumber[b])
                for a, b in example23_result.hasse
                if bottom not in (a, b)
            ],
        )
        result = check_hasse_shape(broken)
        assert not result.passed
        assert "sinks" in result.counterexample

    def test_incomplete_run_only_needs_a_source(self, d3):
        """Test that a budget-limited run is checked for its source only."""
        partial = enumerate_silting(d3, budget=5)
        assert not partial.complete
        assert check_hasse_shape(partial).passed


class TestOrthants:
    """Tests for orthant counts."""

    def test_matches_expected_counts(self, example23_result):
        """Test that the histogram agrees with the per-orthant counts."""
        assert check_orthants(example23_result, EXAMPLE23_ORTHANTS).passed

    def test_lost_object_detected(self, example23_result):
        """Test that a result missing an object disagrees with A_eps."""
        broken = replace(
            example23_result,
            objects=example23_result.objects[:-1],
            dimension_vectors=[],
        )
        result = check_orthants(broken, EXAMPLE23_ORTHANTS)
        assert not result.passed
        assert "A_eps gives" in result.counterexample

    def test_duplicated_object_detected(self, example23_result):
        """Test that a doubled object inflates its orthant."""
        broken = replace(
            example23_result,
            objects=example23_result.objects + example23_result.objects[:1],
        )
        assert not check_orthants(broken, EXAMPLE23_ORTHANTS).passed

    def test_wall_detected(self, example23_result):
        """Test that a g-vector with a zero entry belongs to no orthant."""
        wall = SiltingObject.from_summands(
            [TwoTermComplex.stalk(0, 0), TwoTermComplex.stalk(0, -1)], 2
        )
        broken = replace(example23_result, objects=[*example23_result.objects, wall])
        result = check_orthants(broken)
        assert not result.passed
        assert "wall" in result.counterexample


class TestVerifyAlgebra:
    """Tests for the full verification run."""

    @pytest.mark.parametrize(
        "name,count", [("example23", 6), ("a3", 20), ("d3", 28), ("k4", 136)]
    )
    def test_passes(self, request, name, count):
        """Test that catalog algebras pass every check including duality."""
        report = verify_algebra(request.getfixturevalue(name), budget=1000)
        assert report.passed
        assert report.count == count
        assert {c.name for c in report.checks} == {
            "silting",
            "g-vector injectivity",
            "orthant partition",
            "hasse arrows",
            "hasse shape",
            "duality",
        }
        assert report.first_failure() is None

    def test_incomplete_run_does_not_pass(self, d3):
        """Test that an exhausted budget fails verification."""
        report = verify_algebra(d3, budget=5)
        assert not report.complete
        assert not report.passed
        assert "duality" not in {c.name for c in report.checks}
