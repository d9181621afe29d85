"""Tests for quotient maps, coset tables and transversals."""

import pytest

from braidforge.services.presentations import Family, FamilySpec, catalog, parse_presentation
from braidforge.services.quotients import (
    Z2_X_Z2,
    Z_X_Z2,
    AbelianTarget,
    NotSurjective,
    RelatorNotKilled,
    TargetShapeError,
    coset_of,
    coset_table,
    graded_transversal,
    make_quotient_map,
    standard_quotient,
)
from braidforge.services.words import format_word, parse_word, symbol


@pytest.fixture
def fvb3_quotient():
    """Standard quotient of FVB_3 onto Z/2 x Z/2."""
    return standard_quotient(catalog(FamilySpec(Family.FLAT_VIRTUAL_BRAID, 3)), Family.FLAT_VIRTUAL_BRAID)


class TestAbelianTarget:
    """Tests for AbelianTarget."""

    def test_normalize(self):
        """Test torsion coordinates reduce and free ones do not."""
        assert Z_X_Z2.normalize((5, 3)) == (5, 1)
        assert Z2_X_Z2.add((1, 0), (1, 1)) == (0, 1)

    def test_order(self):
        """Test finite targets know their order."""
        assert Z2_X_Z2.order == 4
        with pytest.raises(TargetShapeError):
            _ = Z_X_Z2.order

    def test_invalid_torsion(self):
        """Test torsion entries below 2 are rejected."""
        with pytest.raises(TargetShapeError):
            AbelianTarget(0, (1,))


class TestQuotientMaps:
    """Tests for make_quotient_map and standard_quotient."""

    def test_standard_welded(self, wb3):
        """Test WB_n maps onto Z x Z/2 with s_i -> (1,0), r_i -> (0,1)."""
        q = standard_quotient(wb3, Family.WELDED_BRAID)
        assert q.target == Z_X_Z2
        assert q.images[symbol("s2")] == (1, 0)
        assert q.images[symbol("r2")] == (0, 1)
        assert q.image(parse_word("s1 s2^-1 r1 r2")) == (0, 0)

    def test_relator_not_killed(self):
        """Test a relator with nonzero image is reported."""
        p = parse_presentation("gens: a\nrels: a^3\n")
        with pytest.raises(RelatorNotKilled) as exc_info:
            make_quotient_map(p, AbelianTarget(0, (2,)), {symbol("a"): (1,)})
        assert exc_info.value.image == (1,)

    def test_not_surjective(self):
        """Test images must generate the target."""
        p = parse_presentation("gens: a\nrels:\n")
        with pytest.raises(NotSurjective):
            make_quotient_map(p, AbelianTarget(1), {symbol("a"): (2,)})

    def test_missing_image(self):
        """Test every generator needs an image."""
        p = parse_presentation("gens: a b\nrels:\n")
        with pytest.raises(TargetShapeError):
            make_quotient_map(p, AbelianTarget(1), {symbol("a"): (1,)})

    def test_explicit_family_has_no_standard_quotient(self):
        """Test explicit presentations have no standard quotient."""
        p = catalog(FamilySpec(Family.EXPLICIT_FVB3_PRIME))
        with pytest.raises(TargetShapeError):
            standard_quotient(p, Family.EXPLICIT_FVB3_PRIME)


class TestCosetTable:
    """Tests for coset enumeration over finite targets."""

    def test_index_four(self, fvb3_quotient):
        """Test FVB_3 has four cosets with representatives 1, s1, r1, s1 r1."""
        table, transversal = coset_table(fvb3_quotient)
        assert table.size == 4
        assert [format_word(r) for r in transversal.reps] == ["1", "s1", "r1", "s1 r1"]

    def test_action(self, fvb3_quotient):
        """Test generators permute cosets consistently with the quotient."""
        table, transversal = coset_table(fvb3_quotient)
        s2, r2 = symbol("s2"), symbol("r2")
        assert table.act(0, s2, 1) == 1
        assert table.act(1, r2, -1) == 3
        assert coset_of(transversal, parse_word("s1 r2 s2")) == 2

    def test_format(self, fvb3_quotient):
        """Test the table prints one row per coset."""
        table, _ = coset_table(fvb3_quotient)
        assert len(table.format().splitlines()) == 5

    def test_infinite_target_rejected(self, wb3):
        """Test infinite targets need a graded transversal."""
        with pytest.raises(TargetShapeError):
            coset_table(standard_quotient(wb3, Family.WELDED_BRAID))


class TestGradedTransversal:
    """Tests for the windowed transversal of Z x Z/2."""

    def test_window_and_shift(self, wb3):
        """Test conjugators span the window and emitted cosets the window plus shift."""
        t = graded_transversal(standard_quotient(wb3, Family.WELDED_BRAID), 2)
        assert t.shift == 3
        assert len(t.conjugators()) == 2 * 5
        assert len(t.cosets()) == 2 * 11

    def test_representatives(self, wb3):
        """Test representatives are s1^m r1^eps."""
        t = graded_transversal(standard_quotient(wb3, Family.WELDED_BRAID), 2)
        assert t.rep((-2, 1)) == parse_word("s1^-2 r1")
        assert t.coset_of(parse_word("s2 s1 r2")) == (2, 1)

    def test_needs_z_x_z2(self, fvb3_quotient):
        """Test other targets are rejected."""
        with pytest.raises(TargetShapeError):
            graded_transversal(fvb3_quotient, 2)

    def test_negative_window(self, wb3):
        """Test the window must be nonnegative."""
        with pytest.raises(TargetShapeError):
            graded_transversal(standard_quotient(wb3, Family.WELDED_BRAID), -1)
