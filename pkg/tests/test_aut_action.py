"""Tests for the Aut(F_n) action of welded braids."""

import pytest

from braidforge.services.aut_action import (
    BasisMismatch,
    CompositionOrder,
    FreeBasis,
    FreeGroupEndo,
    InvalidLetter,
    action_of_word,
    compose,
    generator_action,
    inverse_generator_action,
    is_identity_in_WBn,
    pin_composition_order,
    relators_act_trivially,
    strands_of,
)
from braidforge.services.presentations import Family, FamilySpec, catalog
from braidforge.services.words import parse_word, symbol


class TestGeneratorActions:
    """Tests for the automorphisms of s_i and r_i."""

    def test_sigma(self):
        """Test s1: x1 -> x1 x2 x1^-1, x2 -> x1."""
        f = generator_action(symbol("s1"), FreeBasis(3))
        assert f.image(1) == parse_word("x1 x2 x1^-1")
        assert f.image(2) == parse_word("x1")
        assert f.image(3) == parse_word("x3")

    def test_sigma_inverse(self):
        """Test s1^-1: x1 -> x2, x2 -> x2^-1 x1 x2."""
        f = inverse_generator_action(symbol("s1"), FreeBasis(2))
        assert f.image(1) == parse_word("x2")
        assert f.image(2) == parse_word("x2^-1 x1 x2")

    def test_rho_swaps(self):
        """Test r2 swaps x2 and x3."""
        f = generator_action(symbol("r2"), FreeBasis(3))
        assert f.images == (parse_word("x1"), parse_word("x3"), parse_word("x2"))

    @pytest.mark.parametrize("letter", ["s1", "s2", "r1"])
    def test_inverse_composes_to_identity(self, letter):
        """Test a generator followed by its inverse acts trivially."""
        basis = FreeBasis(3)
        g = symbol(letter)
        assert compose(generator_action(g, basis), inverse_generator_action(g, basis)).is_identity()

    def test_invalid_letter(self):
        """Test letters outside s1..s_{n-1}, r1..r_{n-1} are rejected."""
        with pytest.raises(InvalidLetter):
            generator_action(symbol("s3"), FreeBasis(3))
        with pytest.raises(InvalidLetter):
            generator_action(symbol("a"), FreeBasis(3))

    def test_basis_mismatch(self):
        """Test composing over different bases fails."""
        with pytest.raises(BasisMismatch):
            compose(FreeGroupEndo.identity(FreeBasis(2)), FreeGroupEndo.identity(FreeBasis(3)))


class TestWordProblem:
    """Tests for the WB_n word problem through the action."""

    @pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
    def test_relators_act_trivially(self, n):
        """Test every WB_n relator acts as the identity."""
        relators = catalog(FamilySpec(Family.WELDED_BRAID, n)).relators
        assert relators_act_trivially(relators, n, CompositionOrder.LEFT_TO_RIGHT)

    def test_nontrivial_words(self):
        """Test s1^2 and the adjacent commutator act nontrivially."""
        assert not is_identity_in_WBn(parse_word("s1^2"), 3)
        assert not is_identity_in_WBn(parse_word("s1 s2 s1^-1 s2^-1"), 3)
        assert is_identity_in_WBn(parse_word("r1^2"), 3)

    def test_action_of_word_order(self):
        """Test left-to-right composition applies the first letter's images first."""
        basis = FreeBasis(2)
        f = action_of_word(parse_word("s1 r1"), basis)
        assert f.image(2) == parse_word("x2")
        g = action_of_word(parse_word("s1 r1"), basis, CompositionOrder.RIGHT_TO_LEFT)
        assert g.image(2) == parse_word("x1 x2 x1^-1")

    def test_strand_count(self):
        """Test the strand count is inferred from the largest index."""
        assert strands_of(parse_word("s1 r3")) == 4
        assert is_identity_in_WBn(parse_word("r3^2"))

    def test_pinned_order(self):
        """Test the self-check pins left-to-right composition."""
        assert pin_composition_order(3) is CompositionOrder.LEFT_TO_RIGHT
