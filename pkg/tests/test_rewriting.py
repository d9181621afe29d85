"""Tests for Reidemeister-Schreier rewriting."""

import pytest

from braidforge.services.presentations import Family
from braidforge.services.quotients import TargetShapeError
from braidforge.services.rewriting import (
    MissingWindowError,
    WordNotInKernel,
    derive,
    derived_presentation,
    expand_labels,
    rewrite_tau,
    schreier_generators,
    telescopes,
)
from braidforge.services.words import parse_word


class TestFiniteIndex:
    """Tests for the index-4 derivation of FVB_3'."""

    def test_labels(self, derived_fvb3):
        """Test sixteen Schreier generators a1..h2."""
        assert set(derived_fvb3.generators) == {f"{c}{i}" for c in "abcdefgh" for i in (1, 2)}

    def test_trivial_generators(self, derived_fvb3):
        """Test a1, b1 and f1 are freely trivial and erased."""
        assert set(derived_fvb3.trivial_generators) == {"a1", "b1", "f1"}
        assert derived_fvb3.base.rank == 13
        assert derived_fvb3.base.name == "FVB_3'"

    def test_slots(self, derived_fvb3):
        """Test one relator slot per relator and coset."""
        assert derived_fvb3.slots == 7 * 4
        assert len(derived_fvb3.origins) == len(derived_fvb3.base.relators)

    def test_expansion(self, derived_fvb3):
        """Test c2 = r1 s2 (s1 r1)^-1."""
        assert derived_fvb3.generators["c2"].expansion == parse_word("r1 s2 r1^-1 s1^-1")

    def test_rewrite_and_expand(self, derived_fvb3):
        """Test tau(s1^2) = e1 and e1 expands back to s1^2."""
        t = derived_fvb3.transversal
        assert rewrite_tau(t, parse_word("s1^2")) == parse_word("e1")
        assert expand_labels(parse_word("e1"), derived_fvb3) == parse_word("s1^2")

    def test_word_outside_kernel(self, derived_fvb3):
        """Test tau rejects words outside the kernel."""
        with pytest.raises(WordNotInKernel) as exc_info:
            rewrite_tau(derived_fvb3.transversal, parse_word("s1 r2"))
        assert exc_info.value.coset == 3

    def test_expansions_in_kernel(self, derived_fvb3):
        """Test every Schreier generator lies in the kernel."""
        t = derived_fvb3.transversal
        assert all(t.coset_of(s.expansion) == t.identity for s in derived_fvb3.generators.values())

    def test_telescoping(self, derived_fvb3):
        """Test rewritten relators expand back to their conjugates."""
        assert all(ok for _, ok in telescopes(derived_fvb3))

    def test_same_derivation_from_transversal(self, derived_fvb3):
        """Test deriving again from the transversal gives the same relators."""
        again = derived_presentation(derived_fvb3.transversal)
        assert again.base.relators == derived_fvb3.base.relators

    @pytest.mark.parametrize("n", [3, 4, 5])
    def test_flat_welded_slots(self, n):
        """Test FWB_n' has 8(n-1) Schreier generators."""
        derived = derive(Family.FLAT_WELDED_BRAID, n)
        assert len(derived.generators) == 8 * (n - 1)
        assert len(schreier_generators(derived.transversal, derived.transversal.quotient.source)) == 8 * (n - 1)


class TestGraded:
    """Tests for the windowed derivation of WB_n'."""

    def test_generator_counts(self, derived_wb3):
        """Test generators are emitted for |m| <= window + shift."""
        assert derived_wb3.window == 2
        assert len(derived_wb3.generators) == 2 * 11 * 4
        assert len(derived_wb3.trivial_generators) == 22
        assert derived_wb3.base.rank == 66

    def test_trivial_labels(self, derived_wb3):
        """Test alpha[k,0,1] and beta[k,0,1] are the trivial generators."""
        expected = {f"{name}[{k},0,1]" for name in ("alpha", "beta") for k in range(-5, 6)}
        assert set(derived_wb3.trivial_generators) == expected

    def test_graded_expansion(self, derived_wb3):
        """Test alpha[0,0,2] = s2 s1^-1 and beta[1,1,2] = s1 r1 r2 s1^-1."""
        assert derived_wb3.generators["alpha[0,0,2]"].expansion == parse_word("s2 s1^-1")
        assert derived_wb3.generators["beta[1,1,2]"].expansion == parse_word("s1 r1 r2 s1^-1")

    def test_slots(self, derived_wb3):
        """Test one slot per relator and conjugating representative."""
        assert derived_wb3.slots == 6 * 10

    def test_telescoping(self, derived_wb3):
        """Test rewritten relators expand back to their conjugates."""
        assert all(ok for _, ok in telescopes(derived_wb3))

    def test_window_required(self):
        """Test WB_n needs a window."""
        with pytest.raises(MissingWindowError):
            derive(Family.WELDED_BRAID, 3)

    def test_braid_has_no_graded_transversal(self):
        """Test B_n maps onto Z, which has no graded transversal."""
        with pytest.raises(TargetShapeError):
            derive(Family.BRAID, 3, 2)
