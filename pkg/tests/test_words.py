"""Tests for free-group words."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from braidforge.services.errors import SubstitutionError, WordSyntaxError
from braidforge.services.words import (
    Word,
    canonical_cyclic,
    cyclically_reduce,
    format_word,
    free_reduce,
    invert,
    parse_word,
    reduce_involutions,
    substitute,
    substitute_all,
    symbol,
)

a, b, c = symbol("a"), symbol("b"), symbol("c")

syllables = st.lists(
    st.tuples(st.sampled_from([a, b, c]), st.integers(min_value=-3, max_value=3)), max_size=12
)


class TestSymbols:
    """Tests for generator symbols."""

    def test_strand_index(self):
        """Test s<i> and r<i> carry their strand index."""
        assert symbol("s12").index == 12
        assert symbol("r1").index == 1
        assert symbol("alpha[0,0,1]").index is None

    def test_interned(self):
        """Test the same name gives the same symbol object."""
        assert symbol("s2") is symbol("s2")


class TestFreeReduction:
    """Tests for free reduction and word arithmetic."""

    def test_invert(self):
        """Test inversion reverses syllables and negates exponents."""
        assert invert(parse_word("a b^2 c^-1")) == parse_word("c b^-2 a^-1")
        assert invert(Word.identity()) == Word.identity()

    def test_cancels_inverse_pairs(self):
        """Test adjacent inverse letters cancel."""
        assert free_reduce([(a, 1), (b, 2), (b, -2), (a, -1)]) == Word.identity()

    def test_merges_neighbours(self):
        """Test equal neighbours merge into one syllable."""
        assert free_reduce([(a, 1), (a, 2), (b, -1)]).syllables == ((a, 3), (b, -1))

    def test_length_counts_letters(self):
        """Test length is the sum of absolute exponents."""
        assert parse_word("a^3 b^-2").length == 5

    def test_cyclic_reduction(self):
        """Test conjugating letters are stripped from both ends."""
        assert cyclically_reduce(parse_word("a b a^-1")) == parse_word("b")
        assert cyclically_reduce(parse_word("a^2 b a")) == parse_word("a^3 b")

    def test_rotate(self):
        """Test rotation moves letters from the front to the back."""
        assert parse_word("a b c").rotate(1) == parse_word("b c a")

    @settings(max_examples=1000)
    @given(syllables)
    def test_word_times_inverse_is_identity(self, raw):
        """Test w w^-1 reduces to the identity."""
        w = free_reduce(raw)
        assert (w * w.inverse()).syllables == ()

    @settings(max_examples=1000)
    @given(syllables)
    def test_reduction_is_idempotent(self, raw):
        """Test reducing a reduced word changes nothing."""
        w = free_reduce(raw)
        assert free_reduce(w.syllables) == w

    @settings(max_examples=1000)
    @given(syllables, syllables)
    def test_inverse_of_product(self, left, right):
        """Test (u v)^-1 = v^-1 u^-1."""
        u, v = free_reduce(left), free_reduce(right)
        assert (u * v).inverse() == v.inverse() * u.inverse()


class TestCanonicalCyclic:
    """Tests for canonical forms up to rotation and inversion."""

    def test_rotations_agree(self):
        """Test all rotations share a canonical form."""
        key = canonical_cyclic(parse_word("a b c"))
        assert canonical_cyclic(parse_word("b c a")) == key
        assert canonical_cyclic(parse_word("c a b")) == key

    def test_inverse_agrees(self):
        """Test the inverse word shares the canonical form."""
        assert canonical_cyclic(parse_word("c^-1 b^-1 a^-1")) == canonical_cyclic(parse_word("a b c"))

    def test_distinct_cycles_differ(self):
        """Test different cyclic words keep different forms."""
        assert canonical_cyclic(parse_word("a b c")) != canonical_cyclic(parse_word("a c b^-1"))

    def test_identity(self):
        """Test a conjugate of the identity is the identity."""
        assert canonical_cyclic(parse_word("a b b^-1 a^-1")) == Word.identity()


class TestSubstitution:
    """Tests for substitution."""

    def test_substitute(self):
        """Test every power of the generator is replaced."""
        result = substitute(parse_word("a b^2 a"), b, parse_word("c a"))
        assert result == parse_word("a c a c a a")

    def test_self_reference_rejected(self):
        """Test a replacement containing the generator is rejected."""
        with pytest.raises(SubstitutionError):
            substitute(parse_word("a"), a, parse_word("a b"))

    def test_single_pass_allows_self_reference(self):
        """Test single-pass substitution allows the generator in its image."""
        assert substitute(parse_word("a"), a, parse_word("a b"), single_pass=True) == parse_word("a b")

    def test_substitute_all_is_simultaneous(self):
        """Test images are not substituted into each other."""
        swapped = substitute_all(parse_word("a b^2"), {a: parse_word("b"), b: parse_word("a")})
        assert swapped == parse_word("b a^2")

    def test_reduce_involutions(self):
        """Test exponents of involutions are taken modulo 2."""
        r1, s1 = symbol("r1"), symbol("s1")
        assert reduce_involutions(parse_word("r1 s1 r1^-1"), {r1}) == parse_word("r1 s1 r1")
        assert reduce_involutions(parse_word("s1 r1^2 s1"), {r1}) == parse_word("s1^2")
        assert reduce_involutions(parse_word("s1 r1^2 s1"), {r1, s1}) == Word.identity()


class TestParsing:
    """Tests for word text."""

    def test_parse_groups_and_powers(self):
        """Test parenthesized groups take powers."""
        assert parse_word("(a b)^3") == parse_word("a b a b a b")
        assert parse_word("(a b)^-1") == parse_word("b^-1 a^-1")

    def test_identity_text(self):
        """Test '1' denotes the identity both ways."""
        assert parse_word("1") == Word.identity()
        assert format_word(Word.identity()) == "1"

    def test_format(self):
        """Test the text form uses ^ exponents."""
        assert format_word(parse_word("s1 s1 r2^-1")) == "s1^2 r2^-1"

    def test_bracketed_labels(self):
        """Test graded labels parse as single generators."""
        w = parse_word("alpha[-1,0,2] beta[0,1,3]^-1")
        assert [g.name for g, _ in w.syllables] == ["alpha[-1,0,2]", "beta[0,1,3]"]

    def test_syntax_error_column(self):
        """Test syntax errors report the column."""
        with pytest.raises(WordSyntaxError) as exc_info:
            parse_word("a )")
        assert exc_info.value.column == 3

    def test_missing_exponent(self):
        """Test a caret needs an integer exponent."""
        with pytest.raises(WordSyntaxError):
            parse_word("a^b")
