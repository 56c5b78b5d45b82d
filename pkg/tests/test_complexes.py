"""Tests for two-term complexes, Hom spaces and left mutation."""

import pytest

from siltlab.errors import NotMinimal, SiltlabError, ValidationFailure
from siltlab.silting.complexes import (
    ChainMap,
    ProjectiveSum,
    TwoTermComplex,
    h0_dimension_vector,
    zero_map,
)
from siltlab.silting.homotopy import (
    hom_degree0,
    hom_shift1,
    is_presilting,
    is_two_term_silting,
)
from siltlab.silting.mutation import (
    HomCalculator,
    LeavesTwoTerm,
    SiltingObject,
    left_mutation,
    minimal_left_approximation,
    orthant_of,
)

EXAMPLE23_G = {(1, 1), (2, -1), (1, -2), (-1, 2), (-2, 1), (-1, -1)}


class TestTwoTermComplex:
    """Tests for complexes of projectives."""

    def test_stalk_g_vectors(self):
        """Test that stalks have unit g-vectors of the right sign."""
        assert TwoTermComplex.stalk(1, 0).g_vector(3) == (0, 1, 0)
        assert TwoTermComplex.stalk(1, -1).g_vector(3) == (0, -1, 0)

    def test_stalk_degree_checked(self):
        """Test that stalks only live in degrees 0 and -1."""
        with pytest.raises(SiltlabError):
            TwoTermComplex.stalk(0, -2)

    def test_projective_sum_multiplicities(self):
        """Test conversion between vertex lists and multiplicities."""
        s = ProjectiveSum.from_multiplicities([2, 0, 1])
        assert s.vertices == (0, 0, 2)
        assert s.multiplicities(3) == (2, 0, 1)
        with pytest.raises(SiltlabError):
            ProjectiveSum.from_multiplicities([-1])

    def test_non_minimal_has_no_g_vector(self, example23):
        """Test that a unit on the diagonal makes a complex non-minimal."""
        unit = [[example23.block(example23.idempotent(0), 0, 0)]]
        cx = TwoTermComplex((0,), (0,), unit)
        assert not cx.is_minimal()
        with pytest.raises(NotMinimal):
            cx.g_vector(2)

    def test_h0_of_projective(self, d3):
        """Test that H0 of a stalk P_v is a row of the Cartan matrix."""
        cartan = d3.cartan_matrix()
        for v in range(d3.n):
            dims = h0_dimension_vector(d3, TwoTermComplex.stalk(v, 0))
            assert list(dims) == cartan[v].tolist()

    def test_h0_of_shifted_projective(self, d3):
        """Test that H0 of P_v[1] vanishes."""
        assert h0_dimension_vector(d3, TwoTermComplex.stalk(0, -1)) == (0, 0, 0)

    def test_record_preserves_g_vector(self, example23):
        """Test that a mutated summand survives its record form."""
        obj = left_mutation(example23, SiltingObject.regular(2), 1)
        assert isinstance(obj, SiltingObject)
        for summand in obj.summands:
            back = TwoTermComplex.from_record(summand.to_record(2))
            assert back.g_vector(2) == summand.g_vector(2)

    def test_record_shape_checked(self):
        """Test that a differential must match its terms."""
        with pytest.raises(SiltlabError, match="does not match"):
            TwoTermComplex.from_record({"deg0": [1, 0], "degm1": [0, 1], "diff": []})


class TestHomotopy:
    """Tests for Hom spaces in the homotopy category."""

    def test_hom_between_projectives(self, example23):
        """Test that Hom(P_i, P_j) has dimension dim e_j A e_i."""
        p1, p2 = TwoTermComplex.stalk(0), TwoTermComplex.stalk(1)
        assert hom_degree0(example23, p1, p2).dim == 1
        assert hom_degree0(example23, p1, p1).dim == 1

    def test_shifted_hom(self, example23):
        """Test Hom(P_1[1], P_2[1]) and its vanishing in the other direction."""
        shifted = TwoTermComplex.stalk(0, -1)
        stalk = TwoTermComplex.stalk(1, 0)
        assert hom_shift1(example23, shifted, stalk) == 1
        assert hom_shift1(example23, stalk, shifted) == 0

    def test_stalks_are_presilting(self, d3):
        """Test that projectives and their shifts are presilting."""
        for v in range(d3.n):
            assert is_presilting(d3, TwoTermComplex.stalk(v, 0))
            assert is_presilting(d3, TwoTermComplex.stalk(v, -1))

    def test_regular_and_shift_are_silting(self, d3):
        """Test that A and A[1] are two-term silting."""
        assert is_two_term_silting(d3, SiltingObject.regular(3).summands)
        assert is_two_term_silting(d3, SiltingObject.shifted(3).summands)

    def test_not_silting(self, example23):
        """Test that P_1 + P_1[1] is not silting."""
        summands = [TwoTermComplex.stalk(0, 0), TwoTermComplex.stalk(0, -1)]
        assert not is_two_term_silting(example23, summands)

    def test_wrong_summand_count(self, example23):
        """Test that a silting object needs n summands."""
        assert not is_two_term_silting(example23, [TwoTermComplex.stalk(0)])


class TestMutation:
    """Tests for irreducible left mutation."""

    def test_silting_object_key_sorted(self):
        """Test that summands are ordered by g-vector."""
        obj = SiltingObject.regular(3)
        assert obj.key == ((0, 0, 1), (0, 1, 0), (1, 0, 0))
        assert obj.g_vector == (1, 1, 1)
        assert orthant_of(SiltingObject.shifted(3)) == (-1, -1, -1)

    def test_mutation_of_regular(self, example23):
        """Test that each mutation of A replaces one summand."""
        regular = SiltingObject.regular(2)
        homs = HomCalculator(example23)
        for index in range(2):
            mutated = left_mutation(example23, regular, index, homs, validate=True)
            assert isinstance(mutated, SiltingObject)
            assert mutated.g_vector in EXAMPLE23_G
            assert len(set(regular.key) - set(mutated.key)) == 1
            assert is_two_term_silting(example23, mutated.summands)

    def test_shifted_regular_leaves_window(self, example23):
        """Test that A[1] has no two-term left mutation."""
        shifted = SiltingObject.shifted(2)
        for index in range(2):
            assert isinstance(
                left_mutation(example23, shifted, index), LeavesTwoTerm
            )

    def test_hom_cache_counts(self, example23):
        """Test that repeated Hom lookups hit the cache."""
        homs = HomCalculator(example23)
        p1, p2 = TwoTermComplex.stalk(0), TwoTermComplex.stalk(1)
        homs.hom(p1, p2)
        homs.hom(p1, p2)
        assert homs.misses == 1
        assert homs.hits == 1


class TestChainMap:
    """Tests for the chain-map condition on approximations."""

    def test_approximations_commute(self, d3):
        """Test that every approximation of a projective is a chain map."""
        summands = SiltingObject.regular(3).summands
        for index, source in enumerate(summands):
            others = [s for k, s in enumerate(summands) if k != index]
            approx = minimal_left_approximation(d3, source, others)
            assert approx.map.commutes(d3, source, approx.target)

    def test_identity_without_degree_minus_one_part(self, example23):
        """Test that dropping the lower component breaks commutativity."""
        mutated = left_mutation(example23, SiltingObject.regular(2), 1)
        assert isinstance(mutated, SiltingObject)
        cx = next(s for s in mutated.summands if s.deg0 and s.degm1)
        f0 = zero_map(example23, cx.deg0, cx.deg0)
        for k, v in enumerate(cx.deg0):
            f0[k][k] = example23.block(example23.idempotent(v), v, v)
        broken = ChainMap(f0, zero_map(example23, cx.degm1, cx.degm1))
        assert not broken.commutes(example23, cx, cx)

    def test_validated_mutation_rejects_non_chain_map(self, example23, monkeypatch):
        """Test that validation refuses an approximation that does not commute."""
        monkeypatch.setattr(ChainMap, "commutes", lambda *args: False)
        with pytest.raises(ValidationFailure, match="not a chain map"):
            left_mutation(example23, SiltingObject.regular(2), 0, validate=True)
        assert isinstance(
            left_mutation(example23, SiltingObject.regular(2), 0), SiltingObject
        )
